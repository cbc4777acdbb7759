#include <algorithm>
#include <limits>
#include <optional>

#include "common.hpp"
#include "pdnf/kernels.hpp"

#ifdef PDNF_HAVE_OPENMP
#include <omp.h>
#endif

namespace pdnf::kernels {

int max_threads() {
#ifdef PDNF_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

PolyScalar multiply(const PolyScalar& a, const PolyScalar& b, int order) {
  const std::size_t n = a.nvars();
  PolyScalar out(n, order);
  const int amin = a.min_degree(), bmin = b.min_degree();
  if (amin < 0 || bmin < 0) return out;
  const int amax = a.max_degree(), bmax = b.max_degree();
  const int lo = amin + bmin;
  const int hi = std::min(order, amax + bmax);
  if (lo > hi) return out;

  std::vector<TermMap> parts(static_cast<std::size_t>(hi - lo + 1));
  const std::size_t work = a.term_count() * b.term_count();

#pragma omp parallel for schedule(dynamic) if (work > 4096)
  for (int d = lo; d <= hi; ++d) {
    TermMap& acc = parts[static_cast<std::size_t>(d - lo)];
    for (int da = std::max(amin, d - bmax); da <= std::min(amax, d - bmin); ++da) {
      const TermMap& ta = a.homogeneous(da);
      const TermMap& tb = b.homogeneous(d - da);
      if (ta.empty() || tb.empty()) continue;
      for (const auto& [ma, ca] : ta)
        for (const auto& [mb, cb] : tb) acc.try_emplace(ma * mb).first->second.add_product(ca, cb);
    }
  }

  for (int d = lo; d <= hi; ++d) out.assign_homogeneous(d, std::move(parts[static_cast<std::size_t>(d - lo)]));
  return out;
}

namespace {

bool matches_all(const Monomial& m, std::size_t j, std::span<const std::vector<Scalar>> spectra,
                 std::vector<Scalar>& dots) {
  for (std::size_t s = 0; s < spectra.size(); ++s)
    if (dots[s] != spectra[s][j]) return false;
  (void)m;
  return true;
}

}  // namespace

std::vector<MonomialVector> resonant_pairs(std::span<const std::vector<Scalar>> spectra,
                                           std::size_t nvars, int min_degree, int max_degree) {
  std::vector<MonomialVector> out;
  for (int d = std::max(min_degree, 0); d <= max_degree; ++d) {
    const std::vector<Monomial> mons = monomials_of_degree(nvars, d);
    std::vector<char> hit(mons.size() * nvars, 0);
    const long count = static_cast<long>(mons.size());
#pragma omp parallel for schedule(static) if (count > 256)
    for (long i = 0; i < count; ++i) {
      std::vector<Scalar> dots(spectra.size());
      for (std::size_t s = 0; s < spectra.size(); ++s) dots[s] = mons[static_cast<std::size_t>(i)].dot(spectra[s]);
      for (std::size_t j = 0; j < nvars; ++j)
        hit[static_cast<std::size_t>(i) * nvars + j] =
            matches_all(mons[static_cast<std::size_t>(i)], j, spectra, dots) ? 1 : 0;
    }
    for (std::size_t i = 0; i < mons.size(); ++i)
      for (std::size_t j = 0; j < nvars; ++j)
        if (hit[i * nvars + j]) out.push_back({mons[i], j});
  }
  return out;
}

std::vector<Monomial> invariant_monomials(std::span<const std::vector<Scalar>> spectra,
                                          std::size_t nvars, int min_degree, int max_degree) {
  std::vector<Monomial> out;
  for (int d = std::max(min_degree, 0); d <= max_degree; ++d) {
    const std::vector<Monomial> mons = monomials_of_degree(nvars, d);
    std::vector<char> hit(mons.size(), 0);
    const long count = static_cast<long>(mons.size());
#pragma omp parallel for schedule(static) if (count > 256)
    for (long i = 0; i < count; ++i) {
      bool all = true;
      for (const auto& spec : spectra)
        if (!mons[static_cast<std::size_t>(i)].dot(spec).is_zero()) {
          all = false;
          break;
        }
      hit[static_cast<std::size_t>(i)] = all ? 1 : 0;
    }
    for (std::size_t i = 0; i < mons.size(); ++i)
      if (hit[i]) out.push_back(mons[i]);
  }
  return out;
}

namespace {

using i128 = __int128;

struct GaussInt {
  i128 re = 0;
  i128 im = 0;
};

mpz_class to_mpz(i128 v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  mpz_class hi(static_cast<unsigned long>(u >> 64));
  mpz_class lo(static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFull));
  mpz_class out = (hi << 64) + lo;
  return neg ? mpz_class(-out) : out;
}

// Walks every tuple with the given leading coordinate fixed, carrying the
// partial dot product, and keeps the smallest nonzero squared distance.
void scan_tail(const std::vector<GaussInt>& lam, std::size_t idx, long remaining, GaussInt partial,
               i128& best, bool& found) {
  const std::size_t n = lam.size();
  if (idx + 1 == n) {
    GaussInt v{partial.re + lam[idx].re * remaining, partial.im + lam[idx].im * remaining};
    for (std::size_t j = 0; j < n; ++j) {
      i128 dr = v.re - lam[j].re, di = v.im - lam[j].im;
      i128 nrm = dr * dr + di * di;
      if (nrm != 0 && (!found || nrm < best)) {
        best = nrm;
        found = true;
      }
    }
    return;
  }
  for (long q = 0; q <= remaining; ++q) {
    GaussInt next{partial.re + lam[idx].re * q, partial.im + lam[idx].im * q};
    scan_tail(lam, idx + 1, remaining - q, next, best, found);
  }
}

}  // namespace

std::vector<std::optional<Rational>> omega_degree_minima(std::span<const Scalar> spectrum, int max_degree) {
  const std::size_t n = spectrum.size();
  if (n == 0 || max_degree < 0) return std::vector<std::optional<Rational>>(std::max(max_degree + 1, 0));

  mpz_class q(1);
  for (const auto& l : spectrum) {
    mpz_class d = common_denominator(l);
    mpz_lcm(q.get_mpz_t(), q.get_mpz_t(), d.get_mpz_t());
  }
  // |<Q,L> - L_j| <= (max_degree + 1) * max|L| must stay far below 2^62 so
  // that squared norms fit in 128 bits.
  const mpz_class limit = mpz_class(1) << 60;
  std::vector<GaussInt> lam(n);
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class re = mpz_class(spectrum[i].re() * q);
    mpz_class im = mpz_class(spectrum[i].im() * q);
    mpz_class bound = (abs(re) + abs(im)) * (max_degree + 1);
    if (bound >= limit) return reference::omega_degree_minima(spectrum, max_degree);
    lam[i] = {static_cast<i128>(re.get_si()), static_cast<i128>(im.get_si())};
  }
  const Rational q2(q * q);

  std::vector<std::optional<Rational>> out(static_cast<std::size_t>(max_degree) + 1);
  for (int s = 0; s <= max_degree; ++s) {
    std::vector<i128> best(static_cast<std::size_t>(s) + 1, 0);
    std::vector<char> found(static_cast<std::size_t>(s) + 1, 0);
    if (n == 1) {
      bool f = false;
      i128 b = 0;
      scan_tail(lam, 0, s, GaussInt{}, b, f);
      best[0] = b;
      found[0] = f;
    } else {
#pragma omp parallel for schedule(dynamic) if (s > 8)
      for (int lead = 0; lead <= s; ++lead) {
        bool f = false;
        i128 b = 0;
        GaussInt start{lam[0].re * lead, lam[0].im * lead};
        scan_tail(lam, 1, s - lead, start, b, f);
        best[static_cast<std::size_t>(lead)] = b;
        found[static_cast<std::size_t>(lead)] = f;
      }
    }
    std::optional<i128> m;
    for (std::size_t k = 0; k < best.size(); ++k)
      if (found[k] && (!m || best[k] < *m)) m = best[k];
    if (m) {
      Rational r(to_mpz(*m));
      r /= q2;
      out[static_cast<std::size_t>(s)] = r;
    }
  }
  return out;
}

RowEchelon rref(SparseMatrix m) {
  RowEchelon e;
  e.cols = m.cols;
  auto& rows = m.rows;
  std::size_t next = 0;
  for (std::size_t col = 0; col < m.cols && next < rows.size(); ++col) {
    std::size_t pivot = next;
    while (pivot < rows.size() && detail::find_entry(rows[pivot], col) == nullptr) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[next]);
    const Scalar inv = Scalar(1) / *detail::find_entry(rows[next], col);
    for (auto& [c, v] : rows[next]) v *= inv;

    const SparseRow& prow = rows[next];
    const long count = static_cast<long>(rows.size());
#pragma omp parallel for schedule(dynamic) if (count > 64)
    for (long r = 0; r < count; ++r) {
      if (static_cast<std::size_t>(r) == next) continue;
      const Scalar* v = detail::find_entry(rows[static_cast<std::size_t>(r)], col);
      if (v == nullptr) continue;
      Scalar factor = *v;
      rows[static_cast<std::size_t>(r)] = detail::row_axpy(rows[static_cast<std::size_t>(r)], factor, prow);
    }
    e.pivots.push_back(col);
    ++next;
  }
  rows.resize(next);
  e.rows = std::move(rows);
  return e;
}

}  // namespace pdnf::kernels
