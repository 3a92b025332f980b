#include "liekit/kernels.hpp"

namespace liekit::kernels {

const KernelTable *avx2_table() { return nullptr; }

} // namespace liekit::kernels
