#include "pdnf/resonance.hpp"

#include <algorithm>
#include <cmath>

#include "pdnf/error.hpp"

namespace pdnf {

std::vector<ResonanceRelation> resonant_monomials(const Spectrum& spectrum, int max_degree) {
  if (max_degree < 2) throw Error(ErrorCode::order_too_small, "resonance search needs max degree >= 2");
  const std::vector<std::vector<Scalar>> spectra{spectrum.eigenvalues};
  return kernels::resonant_pairs(spectra, spectrum.size(), 2, max_degree);
}

namespace {

struct Pt {
  Rational x, y;
  friend bool operator<(const Pt& a, const Pt& b) { return a.x != b.x ? a.x < b.x : a.y < b.y; }
  friend bool operator==(const Pt& a, const Pt& b) { return a.x == b.x && a.y == b.y; }
};

Rational cross(const Pt& o, const Pt& a, const Pt& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

std::vector<Pt> hull(std::vector<Pt> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Pt> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && sgn(cross(h[k - 2], h[k - 1], p)) <= 0) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && sgn(cross(h[k - 2], h[k - 1], pts[i])) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

bool on_segment(const Pt& a, const Pt& b, const Pt& p) {
  if (sgn(cross(a, b, p)) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

}  // namespace

bool poincare_domain(const Spectrum& spectrum) {
  if (spectrum.size() == 0) return false;
  std::vector<Pt> pts;
  for (const auto& l : spectrum.eigenvalues) pts.push_back({l.re(), l.im()});
  const Pt origin{0, 0};
  const std::vector<Pt> h = hull(pts);
  if (h.size() == 1) return !(h[0] == origin);
  if (h.size() == 2) return !on_segment(h[0], h[1], origin);
  // Counter-clockwise polygon; 0 is inside or on the boundary iff it is
  // never strictly to the right of an edge.  All-collinear input collapses
  // to two points above, so h has positive area here.
  for (std::size_t i = 0; i < h.size(); ++i)
    if (sgn(cross(h[i], h[(i + 1) % h.size()], origin)) < 0) return true;
  return false;
}

std::string_view to_string(OmegaVerdict v) {
  switch (v) {
    case OmegaVerdict::holds_by_rational_bound: return "holds-by-rational-bound";
    case OmegaVerdict::holds_empirically_to_k: return "holds-empirically-to-K";
    case OmegaVerdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

std::uint64_t omega_enumeration_size(std::size_t n, int max_k) {
  if (max_k < 1) return 0;
  if (max_k > 30) return UINT64_MAX;
  const int top = (1 << max_k) - 1;
  std::uint64_t total = 0;
  for (int s = 2; s <= top; ++s) {
    const std::uint64_t c = count_monomials(n, s);
    if (total + c < total) return UINT64_MAX;
    total += c;
  }
  return total;
}

double log_rational(const Rational& q) {
  if (sgn(q) <= 0) throw Error(ErrorCode::invalid_argument, "log of a non-positive rational");
  long en = 0, ed = 0;
  const double mn = mpz_get_d_2exp(&en, q.get_num_mpz_t());
  const double md = mpz_get_d_2exp(&ed, q.get_den_mpz_t());
  return std::log(mn) - std::log(md) + static_cast<double>(en - ed) * std::log(2.0);
}

OmegaReport omega_condition(const Spectrum& spectrum, int max_k, std::uint64_t budget) {
  if (max_k < 1) throw Error(ErrorCode::invalid_argument, "omega condition needs K >= 1");
  const std::size_t n = spectrum.size();
  const std::uint64_t size = omega_enumeration_size(n, max_k);
  if (size > budget)
    throw Error(ErrorCode::budget_exceeded, "omega enumeration for K=" + std::to_string(max_k) + " visits " +
                                                (size == UINT64_MAX ? std::string("too many")
                                                                    : std::to_string(size)) +
                                                " multi-indices, budget is " + std::to_string(budget));

  OmegaReport report;
  report.max_k = max_k;
  report.tuples = size;
  for (const auto& l : spectrum.eigenvalues) {
    mpz_class d = common_denominator(l);
    mpz_lcm(report.denominator.get_mpz_t(), report.denominator.get_mpz_t(), d.get_mpz_t());
  }

  const int top = (1 << max_k) - 1;
  const auto minima = kernels::omega_degree_minima(spectrum.eigenvalues, top);
  std::optional<Rational> running;
  double sum = 0;
  for (int k = 1; k <= max_k; ++k) {
    for (int s = std::max(2, (1 << (k - 1))); s <= (1 << k) - 1; ++s) {
      const auto& v = minima[static_cast<std::size_t>(s)];
      if (v && (!running || *v < *running)) running = *v;
    }
    OmegaRecord rec;
    rec.k = k;
    rec.omega_squared = running;
    if (running) rec.term = std::ldexp(-0.5 * log_rational(*running), -k);
    sum += rec.term;
    rec.partial_sum = sum;
    report.records.push_back(rec);
  }
  // Gaussian-rational spectra: <Q,L> - L_j lies in (1/q) Z[i], so every
  // nonzero value has modulus at least 1/q and the series converges.
  report.verdict = OmegaVerdict::holds_by_rational_bound;
  return report;
}

}  // namespace pdnf
