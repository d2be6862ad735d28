#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "poissonkit/stability.hpp"

namespace poissonkit {

namespace {

struct CompiledPolynomial {
  std::vector<std::pair<double, Exponents>> terms;

  double operator()(const Eigen::VectorXd& x) const {
    double sum = 0.0;
    for (const auto& [c, e] : terms) {
      double v = c;
      for (std::size_t i = 0; i < e.size(); ++i) {
        for (std::uint32_t p = 0; p < e[i]; ++p) v *= x[static_cast<Eigen::Index>(i)];
      }
      sum += v;
    }
    return sum;
  }
};

CompiledPolynomial compile(const Function& f) {
  CompiledPolynomial out;
  for (const auto& [key, c] : f.terms()) out.terms.emplace_back(c.get_d(), key.monomial);
  return out;
}

// Components pi_t^{ij}(x) = base_ij(x) + t * shift_ij, with their gradients.
class PencilSystem {
 public:
  explicit PencilSystem(const Pencil& p) : n_(p.ambient_dim()) {
    for (const auto& pair : k_subsets(n_, 2)) {
      const Function base = p.base().bivector().coefficient(pair);
      base_.push_back(compile(base));
      std::vector<CompiledPolynomial> grad;
      for (std::size_t k = 0; k < n_; ++k) grad.push_back(compile(partial(base, k)));
      gradient_.push_back(std::move(grad));
      const Function shift = p.direction().coefficient(pair);
      shift_.push_back(shift.is_zero() ? 0.0 : shift.terms().begin()->second.get_d());
    }
  }

  Eigen::VectorXd residual(const Eigen::VectorXd& x, double t) const {
    Eigen::VectorXd f(static_cast<Eigen::Index>(base_.size()));
    for (std::size_t r = 0; r < base_.size(); ++r) f[static_cast<Eigen::Index>(r)] = base_[r](x) + t * shift_[r];
    return f;
  }

  Eigen::MatrixXd jacobian(const Eigen::VectorXd& x) const {
    Eigen::MatrixXd j(static_cast<Eigen::Index>(base_.size()), static_cast<Eigen::Index>(n_));
    for (std::size_t r = 0; r < base_.size(); ++r) {
      for (std::size_t k = 0; k < n_; ++k) {
        j(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(k)) = gradient_[r][k](x);
      }
    }
    return j;
  }

 private:
  std::size_t n_;
  std::vector<CompiledPolynomial> base_;
  std::vector<std::vector<CompiledPolynomial>> gradient_;
  std::vector<double> shift_;
};

struct SolveResult {
  Eigen::VectorXd x;
  double residual;
};

SolveResult gauss_newton(const PencilSystem& sys, Eigen::VectorXd x, double t, const TrackOptions& opt) {
  Eigen::VectorXd f = sys.residual(x, t);
  double r = f.norm();
  for (int it = 0; it < opt.max_iterations && r >= opt.residual_tolerance; ++it) {
    const Eigen::MatrixXd j = sys.jacobian(x);
    const Eigen::VectorXd step = j.completeOrthogonalDecomposition().solve(-f);
    double lambda = 1.0;
    bool improved = false;
    for (int halvings = 0; halvings < 40; ++halvings, lambda *= 0.5) {
      const Eigen::VectorXd trial = x + lambda * step;
      const Eigen::VectorXd ft = sys.residual(trial, t);
      if (ft.norm() < r) {
        x = trial;
        f = ft;
        r = ft.norm();
        improved = true;
        break;
      }
    }
    if (!improved) break;
  }
  return {x, r};
}

}  // namespace

std::vector<TrackPoint> track_zero_numeric(const Pencil& p, std::span<const double> t_grid,
                                           std::span<const double> x_start, double ball_radius,
                                           const TrackOptions& options) {
  const std::size_t n = p.ambient_dim();
  if (x_start.size() != n) throw std::invalid_argument("start point dimension mismatch");
  if (!(ball_radius > 0.0)) throw std::invalid_argument("ball radius must be positive");
  if (!t_grid.empty() && t_grid.front() < 0.0) throw std::invalid_argument("t grid must start at t >= 0");
  if (!std::is_sorted(t_grid.begin(), t_grid.end())) throw std::invalid_argument("t grid must be ascending");

  const PencilSystem sys(p);
  const Eigen::VectorXd start = Eigen::Map<const Eigen::VectorXd>(x_start.data(), static_cast<Eigen::Index>(n));
  Eigen::VectorXd seed = start;

  std::vector<TrackPoint> out;
  out.reserve(t_grid.size());
  for (const double t : t_grid) {
    const SolveResult s = gauss_newton(sys, seed, t, options);
    TrackPoint pt{t, std::nullopt, s.residual};
    if (s.residual < options.residual_tolerance && (s.x - start).norm() < ball_radius) {
      pt.zero = std::vector<double>(s.x.data(), s.x.data() + s.x.size());
      seed = s.x;
    }
    out.push_back(std::move(pt));
  }
  return out;
}

}  // namespace poissonkit
