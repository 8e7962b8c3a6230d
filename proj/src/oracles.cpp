#include "homcell/oracles.hpp"

#include <algorithm>
#include <set>

#include "homcell/errors.hpp"

namespace homcell {

FiniteGroupTable::FiniteGroupTable(const FPModule& m) {
  const ModuleNormalForm& nf = m.normal_form();
  if (m.ring().is_integers() && nf.free_rank > 0)
    throw SizeLimitError("group table requires a finite module");
  orders_ = nf.invariant_factors;
  if (!m.ring().is_integers())
    for (std::size_t i = 0; i < nf.free_rank; ++i)
      orders_.push_back(m.ring().modulus());
  std::sort(orders_.begin(), orders_.end());
  for (const Int& d : orders_) {
    order_ *= static_cast<std::size_t>(d);
    if (order_ > kMaxOrder)
      throw SizeLimitError("group table order exceeds " +
                           std::to_string(kMaxOrder));
  }
}

std::size_t FiniteGroupTable::add(std::size_t a, std::size_t b) const {
  std::size_t out = 0, place = 1;
  for (const Int& d : orders_) {
    std::size_t dd = static_cast<std::size_t>(d);
    std::size_t xa = a % dd, xb = b % dd;
    a /= dd;
    b /= dd;
    out += ((xa + xb) % dd) * place;
    place *= dd;
  }
  return out;
}

std::size_t FiniteGroupTable::negate(std::size_t a) const {
  std::size_t out = 0, place = 1;
  for (const Int& d : orders_) {
    std::size_t dd = static_cast<std::size_t>(d);
    std::size_t xa = a % dd;
    a /= dd;
    out += ((dd - xa) % dd) * place;
    place *= dd;
  }
  return out;
}

std::size_t FiniteGroupTable::scalar_mul(const Int& c, std::size_t a) const {
  std::size_t out = 0, place = 1;
  for (const Int& d : orders_) {
    std::size_t dd = static_cast<std::size_t>(d);
    std::size_t xa = a % dd;
    a /= dd;
    Int r = (c * xa) % d;
    if (r < 0) r += d;
    out += static_cast<std::size_t>(r) * place;
    place *= dd;
  }
  return out;
}

std::vector<Int> oracle_snf_minors(const IntMatrix& a) {
  std::size_t nmin = std::min(a.rows(), a.cols());
  if (nmin > 5)
    throw SizeLimitError("minor enumeration limited to min(rows, cols) <= 5");

  auto subsets = [](std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
      out.push_back(idx);
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
  };

  std::vector<Int> out;
  for (std::size_t k = 1; k <= nmin; ++k) {
    Int g = 0;
    for (const auto& rows : subsets(a.rows(), k)) {
      for (const auto& cols : subsets(a.cols(), k)) {
        IntMatrix minor(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j)
            minor.at(i, j) = a.at(rows[i], cols[j]);
        g = gcd(g, det_laplace(minor));
      }
    }
    out.push_back(abs(g));
  }
  return out;
}

bool oracle_quotient_of_sum(const FPModule& n, const FPModule& m) {
  require_same_ring(n.ring(), m.ring(), "oracle_quotient_of_sum");
  if (n.ring().is_integers() && n.normal_form().free_rank > 0)
    throw SizeLimitError("oracle requires a finite target module");
  if (n.ring().is_integers() && m.normal_form().free_rank > 0)
    return true;  // a free summand surjects onto everything

  FiniteGroupTable tn(n);
  if (tn.order() == 1) return true;

  // A homomorphism is a choice, per cyclic generator of m of order a, of
  // an image y with a*y = 0. The subgroup generated by all such images
  // over all homomorphisms is generated by the union of these torsion
  // sets.
  FiniteGroupTable tm(m);
  std::set<std::size_t> generators;
  for (const Int& a : tm.cyclic_orders()) {
    for (std::size_t y = 0; y < tn.order(); ++y)
      if (tn.scalar_mul(a, y) == 0) generators.insert(y);
  }

  std::vector<bool> reached(tn.order(), false);
  reached[0] = true;
  std::vector<std::size_t> frontier{0};
  std::size_t count = 1;
  while (!frontier.empty()) {
    std::size_t e = frontier.back();
    frontier.pop_back();
    for (std::size_t g : generators) {
      std::size_t s = tn.add(e, g);
      if (!reached[s]) {
        reached[s] = true;
        ++count;
        frontier.push_back(s);
      }
    }
  }
  return count == tn.order();
}

namespace {

// Isomorphism type of the p-primary part of the quotient ker/im from the
// counts |Q[p^e]|; finite abelian groups are determined by these counts.
std::vector<int> partition_from_counts(const std::vector<std::size_t>& counts,
                                       std::size_t p) {
  std::vector<std::size_t> s;  // s_e = log_p |Q[p^e]|
  for (std::size_t c : counts) {
    std::size_t log = 0, v = 1;
    while (v < c) {
      v *= p;
      ++log;
    }
    if (v != c)
      throw InvariantViolation("torsion count is not a prime power");
    s.push_back(log);
  }
  std::vector<int> multiplicities;  // m_e = #parts >= e
  for (std::size_t e = 0; e < s.size(); ++e) {
    std::size_t prev = e == 0 ? 0 : s[e - 1];
    multiplicities.push_back(static_cast<int>(s[e] - prev));
  }
  std::vector<int> parts;
  for (int i = 1; i <= (multiplicities.empty() ? 0 : multiplicities[0]); ++i) {
    int lambda = 0;
    for (std::size_t e = 0; e < multiplicities.size(); ++e)
      if (multiplicities[e] >= i) lambda = static_cast<int>(e) + 1;
    parts.push_back(lambda);
  }
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

}  // namespace

HomologyObject oracle_homology_enum(const FreeComplex& x) {
  if (x.ring().is_integers())
    throw SizeLimitError("enumeration oracle works over Z/n only");
  const Int& nn = x.ring().modulus();
  if (nn > 9) throw SizeLimitError("enumeration oracle requires n <= 9");
  std::size_t n = static_cast<std::size_t>(nn);
  for (std::size_t r : x.ranks())
    if (r > 3) throw SizeLimitError("enumeration oracle requires ranks <= 3");

  auto decode = [&](std::size_t idx, std::size_t rank) {
    std::vector<Int> v(rank);
    for (std::size_t i = 0; i < rank; ++i) {
      v[i] = static_cast<long long>(idx % n);
      idx /= n;
    }
    return v;
  };
  auto encode_image = [&](const IntMatrix& d, const std::vector<Int>& v) {
    std::vector<Int> w = mul_vec(d, v);
    std::size_t idx = 0, place = 1;
    for (const Int& wi : w) {
      Int r = wi % nn;
      if (r < 0) r += nn;
      idx += static_cast<std::size_t>(r) * place;
      place *= n;
    }
    return idx;
  };

  std::map<int, FPModule> summands;
  for (int k = x.bottom(); k <= x.top() && !x.is_zero(); ++k) {
    std::size_t rk = x.rank(k);
    std::size_t total = 1;
    for (std::size_t i = 0; i < rk; ++i) total *= n;

    IntMatrix dk = x.differential(k);
    IntMatrix dk1 = x.differential(k + 1);

    std::vector<std::size_t> kernel;
    for (std::size_t idx = 0; idx < total; ++idx) {
      std::vector<Int> v = decode(idx, rk);
      std::vector<Int> dv = mul_vec(dk, v);
      bool zero = true;
      for (const Int& c : dv)
        if (c % nn != 0) {
          zero = false;
          break;
        }
      if (zero) kernel.push_back(idx);
    }

    std::set<std::size_t> image;
    std::size_t total_up = 1;
    for (std::size_t i = 0; i < x.rank(k + 1); ++i) total_up *= n;
    for (std::size_t idx = 0; idx < total_up; ++idx)
      image.insert(encode_image(dk1, decode(idx, x.rank(k + 1))));

    std::size_t q_order = kernel.size() / image.size();
    if (q_order == 1) continue;

    // Scalar multiplication on encoded vectors.
    auto scalar = [&](const Int& c, std::size_t idx) {
      std::vector<Int> v = decode(idx, rk);
      for (Int& vi : v) {
        vi = (vi * c) % nn;
        if (vi < 0) vi += nn;
      }
      std::size_t out = 0, place = 1;
      for (const Int& vi : v) {
        out += static_cast<std::size_t>(vi) * place;
        place *= n;
      }
      return out;
    };

    std::vector<Int> factors_desc;
    std::vector<std::vector<int>> partitions;
    std::vector<Int> primes = prime_factors(nn);
    for (const Int& p : primes) {
      std::vector<std::size_t> counts;
      std::size_t pe = 1;
      for (;;) {
        pe *= static_cast<std::size_t>(p);
        std::size_t c = 0;
        for (std::size_t v : kernel)
          if (image.count(scalar(Int(static_cast<long long>(pe)), v))) ++c;
        counts.push_back(c / image.size());
        if (counts.size() > 1 && counts.back() == counts[counts.size() - 2])
          break;
        if (counts.back() == q_order) break;
      }
      partitions.push_back(
          partition_from_counts(counts, static_cast<std::size_t>(p)));
    }
    std::size_t max_parts = 0;
    for (const auto& parts : partitions)
      max_parts = std::max(max_parts, parts.size());
    for (std::size_t j = 0; j < max_parts; ++j) {
      Int d = 1;
      for (std::size_t pi = 0; pi < primes.size(); ++pi) {
        if (j < partitions[pi].size()) {
          for (int e = 0; e < partitions[pi][j]; ++e) d *= primes[pi];
        }
      }
      factors_desc.push_back(d);
    }
    std::reverse(factors_desc.begin(), factors_desc.end());
    summands.emplace(
        k, FPModule::from_invariants(x.ring(), 0, std::move(factors_desc)));
  }
  return HomologyObject(x.ring(), std::move(summands));
}

}  // namespace homcell
