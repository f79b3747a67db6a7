#include "qbern/real.hpp"

#include <iomanip>
#include <sstream>

namespace qbern {

Real to_real(const Rational& r) {
  Real out;
  mpfr_set_q(out.backend().data(), r.get_mpq_t(), MPFR_RNDN);
  return out;
}

std::string format_real(const Real& x, int significant_digits) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(significant_digits - 1) << x;
  return os.str();
}

}  // namespace qbern
