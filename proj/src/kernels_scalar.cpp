#include "fpetpf/kernels.hpp"

#include "kernels_detail.hpp"

namespace fpetpf::kernels {

const Ops scalar_table = {
    detail::sum_sq_diff, detail::convex_combine, detail::axpy,
    detail::max_abs,     detail::weno5_plus,     detail::weno5_minus,
};

}  // namespace fpetpf::kernels
