#include "tsl/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <limits>
#include <set>
#include <thread>

#include "tsl/error.hpp"
#include "tsl/linalg.hpp"

namespace tsl {

EnumerationConfig EnumerationConfig::from_environment() {
  EnumerationConfig config;
  if (const char* env = std::getenv("TSL_BUDGET"); env != nullptr && *env != '\0') {
    Integer b = parse_integer(env);
    if (b <= 0 || !b.fits_ulong_p()) fail(ErrorKind::InvalidInput, "TSL_BUDGET must be a positive 64-bit integer");
    config.budget = b.get_ui();
  }
  return config;
}

namespace {

using i128 = __int128;

struct WorkRow {
  IntegerVector normal;
  Integer offset;
  bool operator<(const WorkRow& o) const {
    if (normal != o.normal) return normal < o.normal;
    return offset < o.offset;
  }
};

WorkRow primitive_row(IntegerVector normal, Integer offset) {
  normal.push_back(std::move(offset));
  normal = make_primitive(std::move(normal));
  Integer off = normal.back();
  normal.pop_back();
  return WorkRow{std::move(normal), std::move(off)};
}

// Eliminates the last variable and keeps only facets of the projection.
std::vector<WorkRow> project_out_last(const std::vector<WorkRow>& rows, const std::vector<RationalVector>& projected) {
  const std::size_t vars = rows.front().normal.size() - 1;
  std::vector<const WorkRow*> pos, neg;
  std::vector<WorkRow> candidates;
  for (const auto& r : rows) {
    const int s = sgn(r.normal.back());
    if (s > 0) pos.push_back(&r);
    if (s < 0) neg.push_back(&r);
    if (s == 0) candidates.push_back(primitive_row(IntegerVector(r.normal.begin(), r.normal.end() - 1), r.offset));
  }
  for (const auto* p : pos) {
    for (const auto* q : neg) {
      const Integer a = p->normal.back();
      const Integer b = -q->normal.back();
      IntegerVector normal(vars);
      for (std::size_t i = 0; i < vars; ++i) normal[i] = b * p->normal[i] + a * q->normal[i];
      candidates.push_back(primitive_row(std::move(normal), b * p->offset + a * q->offset));
    }
  }
  std::set<WorkRow> kept;
  for (auto& c : candidates) {
    if (kept.contains(c)) continue;
    std::vector<RationalVector> tight;
    for (const auto& v : projected) {
      if (dot(c.normal, v) + Rational(c.offset) == 0) tight.push_back(v);
    }
    if (linalg::affine_dimension(tight) == static_cast<int>(vars) - 1) kept.insert(std::move(c));
  }
  return {kept.begin(), kept.end()};
}

i128 floor_div(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

i128 ceil_div(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}

FloorSums floor_sums_nonnegative(i128 a, i128 b, i128 c, i128 n) {
  const i128 s1 = n * (n + 1) / 2;
  if (a == 0) {
    const i128 q = b / c;
    return {(n + 1) * q, q * s1, (n + 1) * q * q};
  }
  if (a >= c || b >= c) {
    const i128 qa = a / c, qb = b / c;
    const FloorSums r = floor_sums_nonnegative(a % c, b % c, c, n);
    const i128 s2 = n * (n + 1) * (2 * n + 1) / 6;
    return {qa * s1 + qb * (n + 1) + r.f, qa * s2 + qb * s1 + r.g,
            qa * qa * s2 + qb * qb * (n + 1) + 2 * qa * qb * s1 + 2 * qb * r.f + 2 * qa * r.g + r.h};
  }
  const i128 top = (a * n + b) / c;
  if (top == 0) return {};
  const FloorSums r = floor_sums_nonnegative(c, c - b - 1, a, top - 1);
  FloorSums out;
  out.f = n * top - r.f;
  out.g = (top * n * (n + 1) - r.h - r.f) / 2;
  out.h = n * top * (top + 1) - 2 * r.g - 2 * r.f - out.f;
  return out;
}

Integer to_integer(i128 v) {
  const bool negative = v < 0;
  unsigned __int128 u = negative ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  Integer hi(static_cast<unsigned long>(u >> 64));
  Integer lo(static_cast<unsigned long>(u & std::numeric_limits<std::uint64_t>::max()));
  Integer out = (hi << 64) + lo;
  return negative ? Integer(-out) : out;
}

struct Walker {
  const std::vector<std::vector<LatticeEnumerator::Row>>& levels;
  std::vector<std::vector<std::size_t>> active;  // rows with nonzero coefficient at that level
  std::size_t m;
  i128 k;
  std::uint64_t budget;
  std::atomic<std::uint64_t>& shared_candidates;
  std::vector<LatticePoint>* points = nullptr;

  std::vector<std::int64_t> x;
  i128 count = 0;
  std::vector<i128> sums;
  std::uint64_t local = 0;

  Walker(const std::vector<std::vector<LatticeEnumerator::Row>>& lv, std::size_t dim, std::int64_t dilation,
         std::uint64_t cap, std::atomic<std::uint64_t>& counter)
      : levels(lv), m(dim), k(dilation), budget(cap), shared_candidates(counter), x(dim, 0), sums(dim, 0) {
    active.resize(m);
    for (std::size_t d = 0; d < m; ++d) {
      for (std::size_t r = 0; r < levels[d].size(); ++r) {
        if (levels[d][r].normal[d] != 0) active[d].push_back(r);
      }
    }
  }

  bool bounds(std::size_t d, i128& lo, i128& hi) const {
    bool has_lo = false, has_hi = false;
    for (auto r : active[d]) {
      const auto& row = levels[d][r];
      i128 rhs = -static_cast<i128>(row.offset) * k;
      for (std::size_t i = 0; i < d; ++i) rhs -= static_cast<i128>(row.normal[i]) * x[i];
      const i128 c = row.normal[d];
      if (c > 0) {
        i128 b = ceil_div(rhs, c);
        if (!has_lo || b > lo) lo = b;
        has_lo = true;
      } else {
        i128 b = floor_div(rhs, c);
        if (!has_hi || b < hi) hi = b;
        has_hi = true;
      }
    }
    ensure(has_lo && has_hi, "projection system does not bound a coordinate");
    return lo <= hi;
  }

  void charge(std::uint64_t n) {
    local += n;
    if (local >= 4096 || n >= 4096) {
      auto total = shared_candidates.fetch_add(local) + local;
      local = 0;
      if (total > budget) {
        fail(ErrorKind::EnumerationBudgetExceeded,
             "more than " + std::to_string(budget) + " candidate points; raise --budget or TSL_BUDGET");
      }
    }
  }

  void flush() {
    auto total = shared_candidates.fetch_add(local) + local;
    local = 0;
    if (total > budget) {
      fail(ErrorKind::EnumerationBudgetExceeded,
           "more than " + std::to_string(budget) + " candidate points; raise --budget or TSL_BUDGET");
    }
  }

  // Lowest z bound (upper = false) or highest (upper = true) as a row index, valid on
  // [y, last]; shrinks last to where that row stops being the binding one.
  std::size_t binding_row(const std::vector<i128>& rhs, bool upper, i128 y, i128& last) const {
    const auto& rows = levels[m - 1];
    const std::size_t zd = m - 1, yd = m - 2;
    std::size_t best = rows.size();
    // Row r: a y + c z >= rhs, so z is bounded by (rhs - a y) / c.
    auto value_cmp = [&](std::size_t r, std::size_t s) {  // sign of l_s(y) - l_r(y) times c_r c_s
      const i128 ar = rows[r].normal[yd], cr = rows[r].normal[zd], as = rows[s].normal[yd], cs = rows[s].normal[zd];
      const i128 p = rhs[s] * cr - rhs[r] * cs, q = ar * cs - as * cr;
      return std::pair<i128, i128>{p, q};
    };
    for (auto r : active[zd]) {
      if ((rows[r].normal[zd] < 0) != upper) continue;
      if (best == rows.size()) {
        best = r;
        continue;
      }
      const auto [p, q] = value_cmp(best, r);
      const i128 delta = p + q * y;
      // Lower bounds take the maximum, upper bounds the minimum; ties go to the row that stays binding longer.
      if (upper ? (delta < 0 || (delta == 0 && q < 0)) : (delta > 0 || (delta == 0 && q > 0))) best = r;
    }
    for (auto s : active[zd]) {
      if ((rows[s].normal[zd] < 0) != upper || s == best) continue;
      const auto [p, q] = value_cmp(best, s);
      if (!upper && q > 0) last = std::min(last, floor_div(-p, q));
      if (upper && q < 0) last = std::min(last, floor_div(p, -q));
    }
    return best;
  }

  // Closed-form count and sums over the fibre {(y, z)} above the fixed prefix x_0..x_{m-3}.
  void fibre2(i128 ylo, i128 yhi) {
    const auto& rows = levels[m - 1];
    const std::size_t zd = m - 1, yd = m - 2;
    std::vector<i128> rhs(rows.size(), 0);
    for (auto r : active[zd]) {
      i128 v = -static_cast<i128>(rows[r].offset) * k;
      for (std::size_t i = 0; i < yd; ++i) v -= static_cast<i128>(rows[r].normal[i]) * x[i];
      rhs[r] = v;
    }
    i128 fibre_count = 0, y_sum = 0, z_sum2 = 0;
    for (i128 y = ylo; y <= yhi;) {
      i128 last = yhi;
      const std::size_t lr = binding_row(rhs, false, y, last);
      const std::size_t ur = binding_row(rhs, true, y, last);
      ensure(lr < rows.size() && ur < rows.size(), "projection system does not bound a coordinate");
      const i128 n = last - y;
      // z <= floor((a y - rhs) / -c) for c < 0 and z >= -floor((a y - rhs) / c) for c > 0.
      const i128 au = rows[ur].normal[yd], cu = -static_cast<i128>(rows[ur].normal[zd]);
      const i128 al = rows[lr].normal[yd], cl = rows[lr].normal[zd];
      const FloorSums up = floor_sums(au, au * y - rhs[ur], cu, n);
      const FloorSums low = floor_sums(al, al * y - rhs[lr], cl, n);
      const i128 cnt = up.f + low.f + (n + 1);
      fibre_count += cnt;
      y_sum += y * cnt + up.g + low.g + n * (n + 1) / 2;
      z_sum2 += up.h + up.f - low.h - low.f;
      y = last + 1;
    }
    count += fibre_count;
    for (std::size_t i = 0; i < yd; ++i) sums[i] += fibre_count * x[i];
    sums[yd] += y_sum;
    sums[zd] += z_sum2 / 2;
  }

  void walk(std::size_t d) {
    i128 lo = 0, hi = 0;
    if (!bounds(d, lo, hi)) return;
    if (points == nullptr && d + 2 == m) {
      charge(1);
      fibre2(lo, hi);
      return;
    }
    const auto width = static_cast<std::uint64_t>(hi - lo + 1);
    if (d + 1 == m) {
      charge(points != nullptr ? width : 1);
      if (points != nullptr) {
        for (i128 v = lo; v <= hi; ++v) {
          x[d] = static_cast<std::int64_t>(v);
          points->push_back(LatticePoint{x});
        }
        return;
      }
      const i128 n = hi - lo + 1;
      count += n;
      for (std::size_t i = 0; i < d; ++i) sums[i] += n * x[i];
      sums[d] += (lo + hi) * n / 2;
      return;
    }
    charge(width);
    for (i128 v = lo; v <= hi; ++v) {
      x[d] = static_cast<std::int64_t>(v);
      walk(d + 1);
    }
  }

  void walk_outer(i128 from, i128 to) {
    if (m == 1) {
      // A single level: the outer range is the whole interval.
      const i128 n = to - from + 1;
      charge(points != nullptr ? static_cast<std::uint64_t>(n) : 1);
      if (points != nullptr) {
        for (i128 v = from; v <= to; ++v) points->push_back(LatticePoint{{static_cast<std::int64_t>(v)}});
      } else {
        count += n;
        sums[0] += (from + to) * n / 2;
      }
      return;
    }
    if (points == nullptr && m == 2) {
      charge(1);
      fibre2(from, to);
      return;
    }
    charge(static_cast<std::uint64_t>(to - from + 1));
    for (i128 v = from; v <= to; ++v) {
      x[0] = static_cast<std::int64_t>(v);
      walk(1);
    }
  }
};

}  // namespace

LatticeEnumerator::LatticeEnumerator(const LatticePolytope& p) : dim_(p.dim()) {
  if (p.is_point()) fail(ErrorKind::InvalidInput, "enumerator needs a full-dimensional polytope");
  std::vector<WorkRow> system;
  for (const auto& f : p.facets()) system.push_back(WorkRow{f.normal, f.offset});
  std::vector<std::vector<WorkRow>> work(dim_);
  work[dim_ - 1] = system;
  for (std::size_t d = dim_ - 1; d >= 1; --d) {
    std::set<RationalVector> projected;
    for (const auto& v : p.vertices()) projected.insert(RationalVector(v.begin(), v.begin() + static_cast<long>(d)));
    work[d - 1] = project_out_last(work[d], {projected.begin(), projected.end()});
  }
  levels_.resize(dim_);
  for (std::size_t d = 0; d < dim_; ++d) {
    for (const auto& r : work[d]) {
      Row row;
      for (const auto& c : r.normal) row.normal.push_back(to_int64(c));
      row.offset = to_int64(r.offset);
      levels_[d].push_back(std::move(row));
    }
  }
}

namespace {

unsigned thread_count(const EnumerationConfig& config, i128 range) {
  unsigned t = config.threads != 0 ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  if (range < static_cast<i128>(t)) t = static_cast<unsigned>(std::max<i128>(range, 1));
  return t;
}

template <class Fn>
void run_chunks(unsigned threads, i128 lo, i128 hi, Fn&& fn) {
  const i128 total = hi - lo + 1;
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    const i128 from = lo + total * t / threads;
    const i128 to = lo + total * (t + 1) / threads - 1;
    auto body = [&, t, from, to] {
      try {
        fn(t, from, to);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    };
    if (threads == 1) {
      body();
    } else {
      pool.emplace_back(body);
    }
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

LatticeStats LatticeEnumerator::stats(std::int64_t k, const EnumerationConfig& config) const {
  if (k < 0) fail(ErrorKind::InvalidInput, "dilation factor must be nonnegative");
  LatticeStats out{0, IntegerVector(dim_, 0), 0};
  if (k == 0) {
    out.count = 1;
    out.candidates = 1;
    return out;
  }
  std::atomic<std::uint64_t> candidates{0};
  Walker probe(levels_, dim_, k, config.budget, candidates);
  i128 lo = 0, hi = 0;
  if (!probe.bounds(0, lo, hi)) return out;

  const unsigned threads = thread_count(config, hi - lo + 1);
  std::vector<Walker> walkers;
  walkers.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) walkers.emplace_back(levels_, dim_, k, config.budget, candidates);
  run_chunks(threads, lo, hi, [&](unsigned t, i128 from, i128 to) {
    if (from > to) return;
    walkers[t].walk_outer(from, to);
    walkers[t].flush();
  });
  i128 count = 0;
  std::vector<i128> sums(dim_, 0);
  for (const auto& w : walkers) {
    count += w.count;
    for (std::size_t i = 0; i < dim_; ++i) sums[i] += w.sums[i];
  }
  out.count = to_integer(count);
  for (std::size_t i = 0; i < dim_; ++i) out.coordinate_sum[i] = to_integer(sums[i]);
  out.candidates = candidates.load();
  return out;
}

std::vector<LatticePoint> LatticeEnumerator::points(std::int64_t k, const EnumerationConfig& config) const {
  if (k < 0) fail(ErrorKind::InvalidInput, "dilation factor must be nonnegative");
  if (k == 0) return {LatticePoint{std::vector<std::int64_t>(dim_, 0)}};
  std::atomic<std::uint64_t> candidates{0};
  Walker probe(levels_, dim_, k, config.budget, candidates);
  i128 lo = 0, hi = 0;
  if (!probe.bounds(0, lo, hi)) return {};

  const unsigned threads = thread_count(config, hi - lo + 1);
  std::vector<std::vector<LatticePoint>> chunks(threads);
  std::vector<Walker> walkers;
  walkers.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    walkers.emplace_back(levels_, dim_, k, config.budget, candidates);
    walkers.back().points = &chunks[t];
  }
  run_chunks(threads, lo, hi, [&](unsigned t, i128 from, i128 to) {
    if (from > to) return;
    walkers[t].walk_outer(from, to);
    walkers[t].flush();
  });
  std::vector<LatticePoint> out;
  for (auto& c : chunks) out.insert(out.end(), std::make_move_iterator(c.begin()), std::make_move_iterator(c.end()));
  return out;
}

FloorSums floor_sums(i128 a, i128 b, i128 c, i128 n) {
  if (c <= 0) fail(ErrorKind::InvalidInput, "floor_sums needs a positive divisor");
  if (n < 0) return {};
  const i128 qa = floor_div(a, c), qb = floor_div(b, c);
  const FloorSums r = floor_sums_nonnegative(a - qa * c, b - qb * c, c, n);
  const i128 s1 = n * (n + 1) / 2;
  const i128 s2 = n * (n + 1) * (2 * n + 1) / 6;
  return {qa * s1 + qb * (n + 1) + r.f, qa * s2 + qb * s1 + r.g,
          qa * qa * s2 + qb * qb * (n + 1) + 2 * qa * qb * s1 + 2 * qb * r.f + 2 * qa * r.g + r.h};
}

std::vector<LatticePoint> lattice_points(const LatticePolytope& p, const EnumerationConfig& config) {
  if (p.is_point()) {
    const auto& v = p.vertices().front();
    if (!is_integral(v)) return {};
    LatticePoint pt;
    for (const auto& c : v) pt.coords.push_back(to_int64(c.get_num()));
    return {pt};
  }
  return LatticeEnumerator(p).points(1, config);
}

}  // namespace tsl
