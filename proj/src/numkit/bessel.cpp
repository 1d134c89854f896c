#include "susy/numkit.hpp"

#include <cmath>
#include <limits>

#include <boost/math/special_functions/bessel.hpp>

namespace susy {

namespace {

namespace bm = boost::math;
using quiet_policy = bm::policies::policy<bm::policies::underflow_error<bm::policies::ignore_error>,
                                          bm::policies::overflow_error<bm::policies::ignore_error>,
                                          bm::policies::promote_double<false>>;

void require_positive(double x) {
    if (!(x > 0.0)) throw domain_error("modified Bessel functions need x > 0");
}

} // namespace

BesselValue bessel_k_checked(double order, double x) {
    require_positive(x);
    if (!std::isfinite(order)) throw domain_error("Bessel order must be finite");
    BesselValue r;
    r.value = bm::cyl_bessel_k(std::abs(order), x, quiet_policy());
    r.underflow = (r.value == 0.0);
    return r;
}

double bessel_k(double order, double x) { return bessel_k_checked(order, x).value; }

double bessel_i(double order, double x) {
    require_positive(x);
    return bm::cyl_bessel_i(order, x, quiet_policy());
}

double bessel_k_prime(double order, double x) {
    require_positive(x);
    return -0.5 * (bessel_k(order - 1.0, x) + bessel_k(order + 1.0, x));
}

double bessel_i_prime(double order, double x) {
    require_positive(x);
    return 0.5 * (bessel_i(order - 1.0, x) + bessel_i(order + 1.0, x));
}

} // namespace susy
