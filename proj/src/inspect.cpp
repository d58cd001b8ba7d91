#include "helent/inspect.hpp"

#include <cstdio>
#include <sstream>

namespace helent {

namespace {

std::string render(const SpinorMatrix& m) {
  char buf[160];
  std::ostringstream os;
  for (int i = 0; i < 2; ++i) {
    os << (i == 0 ? "[ " : "  ");
    for (int j = 0; j < 2; ++j) {
      std::snprintf(buf, sizeof(buf), "%+.12e%+.12ei", m(i, j).real(),
                    m(i, j).imag());
      os << buf << (j == 0 ? "  " : "");
    }
    os << (i == 0 ? "\n" : " ]\n");
  }
  return os.str();
}

double min_sign_distance(const SpinorMatrix& a, const SpinorMatrix& b) {
  const double plus = (a - b).cwiseAbs().maxCoeff();
  const double minus = (a + b).cwiseAbs().maxCoeff();
  return std::min(plus, minus);
}

}  // namespace

MatrixReport inspect_matrix(double eta, double tau, double theta, double phi,
                            Mode mode) {
  const FourMomentum p(1.0, tau, theta, phi);
  MatrixReport report;
  report.d = mode == Mode::helicity ? helicity_rotation(eta, p)
                                    : wigner_rotation(eta, p);
  report.unitarity = unitarity_residual(report.d);
  report.angles = eta == 0.0 ? BoostedAngles{tau, theta}
                             : boosted_rapidity_polar(eta, p);
  report.closed_form = helicity_rotation_closed_form(eta, tau, theta);

  const FourMomentum p0(1.0, tau, theta, 0.0);
  const SpinorMatrix d_at_zero = mode == Mode::helicity
                                     ? helicity_rotation(eta, p0)
                                     : wigner_rotation(eta, p0);
  report.closed_form_deviation =
      mode == Mode::helicity
          ? min_sign_distance(report.closed_form, d_at_zero)
          : 0.0;
  report.phi_deviation = (report.d - d_at_zero).cwiseAbs().maxCoeff();

  std::ostringstream os;
  os << "momentum: tau = " << tau << ", theta = " << theta << ", phi = " << phi
     << "\nboost: eta = " << eta
     << "\nmode: " << (mode == Mode::helicity ? "helicity" : "spin") << '\n'
     << "D =\n"
     << render(report.d) << "unitarity residual = " << report.unitarity << '\n'
     << "boosted rapidity = " << report.angles.rapidity
     << ", boosted polar angle = " << report.angles.polar << '\n'
     << "closed-form product (phi = 0) =\n"
     << render(report.closed_form);
  if (mode == Mode::helicity) {
    os << "closed form vs computed (phi = 0), up to sign = "
       << report.closed_form_deviation << '\n';
  }
  os << "phi dependence |D(phi) - D(0)| = " << report.phi_deviation << '\n';
  report.text = os.str();
  return report;
}

}  // namespace helent
