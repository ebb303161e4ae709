#include "weyl/grid_rep.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace weyl {

namespace {

// The FFTW planner is not thread-safe; execution with new-array interfaces
// is. Plans are cached per transform size with FFTW_UNALIGNED so any buffer
// may be used.
class FftPlans {
 public:
  static FftPlans& instance() {
    static FftPlans plans;
    return plans;
  }

  ~FftPlans() {
    for (auto& [key, plan] : plans_)
      if (plan != nullptr) fftw_destroy_plan(plan);
  }

  void forward(GridVector& data) { run(data, FFTW_FORWARD); }

  void backward_normalized(GridVector& data) {
    run(data, FFTW_BACKWARD);
    const double inv = 1.0 / static_cast<double>(data.size());
    for (auto& v : data) v *= inv;
  }

 private:
  void run(GridVector& data, int sign) {
    fftw_plan plan = nullptr;
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto& slot = plans_[{data.size(), sign}];
      if (slot == nullptr) {
        GridVector dummy(data.size());
        slot = fftw_plan_dft_1d(static_cast<int>(data.size()),
                                reinterpret_cast<fftw_complex*>(dummy.data()),
                                reinterpret_cast<fftw_complex*>(dummy.data()), sign,
                                FFTW_ESTIMATE | FFTW_UNALIGNED);
      }
      plan = slot;
    }
    fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(data.data()),
                     reinterpret_cast<fftw_complex*>(data.data()));
  }

  std::mutex mutex_;
  std::map<std::pair<std::size_t, int>, fftw_plan> plans_;
};

double signed_frequency(std::size_t j, std::size_t n, double half_width) {
  const auto jj = static_cast<long>(j);
  const long m = jj < static_cast<long>(n / 2) ? jj : jj - static_cast<long>(n);
  return std::numbers::pi / half_width * static_cast<double>(m);
}

}  // namespace

GridRep::GridRep(std::size_t n_points, double half_width) : n_(n_points), x_(half_width) {
  if (n_ == 0 || (n_ & (n_ - 1)) != 0)
    throw std::invalid_argument("GridRep: grid size must be a power of two");
  if (!(half_width > 0.0)) throw std::invalid_argument("GridRep: half width must be positive");
  dx_ = 2.0 * x_ / static_cast<double>(n_);
}

cplx GridRep::inner(const GridVector& a, const GridVector& b) const {
  if (a.size() != n_ || b.size() != n_)
    throw std::invalid_argument("GridRep::inner: wrong vector length");
  cplx acc(0.0, 0.0);
  for (std::size_t j = 0; j < n_; ++j) acc += std::conj(a[j]) * b[j];
  return acc * dx_;
}

double GridRep::norm(const GridVector& a) const { return std::sqrt(inner(a, a).real()); }

GridVector GridRep::gaussian_vector() const {
  GridVector v(n_);
  const double norm_const = std::pow(std::numbers::pi, -0.25);
  for (std::size_t j = 0; j < n_; ++j) v[j] = norm_const * std::exp(-0.5 * x(j) * x(j));
  const double nn = norm(v);
  for (auto& c : v) c /= nn;
  return v;
}

GridVector grid_weyl_apply(const GridRep& rep, const PhasePoint& z, const GridVector& psi) {
  if (z.block_dim() != 1)
    throw std::invalid_argument("grid_weyl_apply: block dimension must be 1");
  if (psi.size() != rep.size())
    throw std::invalid_argument("grid_weyl_apply: wrong vector length");
  const double z1 = to_double(z.first[0]);
  const double z2 = to_double(z.second[0]);
  if (std::abs(z2) > rep.half_width() / 2.0)
    throw std::invalid_argument("grid_weyl_apply: translation exceeds half the window");

  // Translation psi(x - z2) in the spectral domain.
  GridVector out = psi;
  auto& plans = FftPlans::instance();
  plans.forward(out);
  for (std::size_t j = 0; j < rep.size(); ++j) {
    const double k = signed_frequency(j, rep.size(), rep.half_width());
    out[j] *= std::polar(1.0, -k * z2);
  }
  plans.backward_normalized(out);

  // Modulation e^{-i z1 z2 / 2} e^{i z1 x}.
  for (std::size_t j = 0; j < rep.size(); ++j)
    out[j] *= std::polar(1.0, z1 * rep.x(j) - 0.5 * z1 * z2);
  return out;
}

std::vector<cplx> vector_function(const GridRep& rep, const GridVector& xi,
                                  const std::vector<PhasePoint>& z_list) {
  if (std::abs(rep.norm(xi) - 1.0) > 1e-8)
    throw std::invalid_argument("vector_function: xi must be normalized on the grid");
  std::vector<cplx> values;
  values.reserve(z_list.size());
  for (const auto& z : z_list) values.push_back(rep.inner(xi, grid_weyl_apply(rep, z, xi)));
  return values;
}

namespace {

// Nearest rational with the given denominator; the grid operators take exact
// coordinates, and circle samples only need ~1e-9 radial accuracy.
Rational snap(double v, long den = 1 << 30) {
  return Rational(static_cast<long long>(std::llround(v * static_cast<double>(den))), den);
}

}  // namespace

std::vector<DecayRow> c0_decay_scan(const GridRep& rep,
                                    const std::vector<std::pair<double, GridVector>>& mixture,
                                    const std::vector<double>& radius_grid,
                                    std::size_t n_angles) {
  double wsum = 0.0;
  for (const auto& [p, xi] : mixture) {
    if (p < 0.0) throw std::invalid_argument("c0_decay_scan: mixture weights must be >= 0");
    wsum += p;
  }
  if (std::abs(wsum - 1.0) > 1e-9)
    throw std::invalid_argument("c0_decay_scan: mixture weights must sum to 1");

  std::vector<DecayRow> rows;
  for (double radius : radius_grid) {
    double worst = 0.0;
    for (std::size_t a = 0; a < n_angles; ++a) {
      const double angle =
          2.0 * std::numbers::pi * static_cast<double>(a) / static_cast<double>(n_angles);
      const PhasePoint z({snap(radius * std::cos(angle))}, {snap(radius * std::sin(angle))});
      cplx h(0.0, 0.0);
      for (const auto& [p, xi] : mixture)
        h += p * rep.inner(xi, grid_weyl_apply(rep, z, xi));
      worst = std::max(worst, std::abs(h));
    }
    rows.push_back({radius, worst});
  }
  return rows;
}

void write_decay_csv(std::ostream& out, const std::vector<DecayRow>& rows) {
  out << "radius,max_abs\n";
  out.precision(17);
  for (const auto& r : rows) out << r.radius << ',' << r.max_abs << '\n';
}

nlohmann::ordered_json decay_to_json(const std::vector<DecayRow>& rows) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json row;
    row["radius"] = r.radius;
    row["max_abs"] = r.max_abs;
    arr.push_back(std::move(row));
  }
  return arr;
}

}  // namespace weyl
