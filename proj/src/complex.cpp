#include "homcell/complex.hpp"

#include <algorithm>

#include "homcell/errors.hpp"

namespace homcell {

namespace {

// Presentation of span(gens)/span(rels) inside the ambient free module,
// assuming span(rels) (mod n) is contained in span(gens) (mod n). The
// generators of the result are exactly the columns of `gens`.
FPModule subquotient_module(const RingSpec& ring, const IntMatrix& gens,
                            const IntMatrix& rels) {
  IntMatrix aug = hcat(gens, rels);
  if (ring.modulus() != 0)
    aug = hcat(aug, mul(ring.modulus(), IntMatrix::identity(gens.rows())));
  IntMatrix rel = kernel_basis(aug, Int(0)).top_rows(gens.cols());
  return FPModule(ring, rel);
}

bool congruent_mod(const IntMatrix& a, const IntMatrix& b, const Int& n) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      Int d = a.at(i, j) - b.at(i, j);
      if (n == 0 ? d != 0 : d % n != 0) return false;
    }
  return true;
}

}  // namespace

HomologyObject::HomologyObject(RingSpec ring, std::map<int, FPModule> summands)
    : ring_(std::move(ring)), summands_(std::move(summands)) {
  for (auto it = summands_.begin(); it != summands_.end();) {
    require_same_ring(ring_, it->second.ring(), "HomologyObject");
    if (it->second.is_zero())
      it = summands_.erase(it);
    else
      ++it;
  }
}

HomologyObject HomologyObject::concentrated(const FPModule& m, int degree) {
  std::map<int, FPModule> s;
  if (!m.is_zero()) s.emplace(degree, m);
  return HomologyObject(m.ring(), std::move(s));
}

FPModule HomologyObject::module_at(int degree) const {
  auto it = summands_.find(degree);
  if (it == summands_.end()) return FPModule::zero(ring_);
  return it->second;
}

SuppSet HomologyObject::support_at(int degree) const {
  auto it = summands_.find(degree);
  if (it == summands_.end()) return SuppSet::empty(ring_);
  return it->second.support();
}

HomologyObject HomologyObject::suspended(int shift) const {
  std::map<int, FPModule> s;
  for (const auto& [k, m] : summands_) s.emplace(k + shift, m);
  return HomologyObject(ring_, std::move(s));
}

bool HomologyObject::is_isomorphic_to(const HomologyObject& other) const {
  if (!(ring_ == other.ring_)) return false;
  if (summands_.size() != other.summands_.size()) return false;
  for (const auto& [k, m] : summands_) {
    auto it = other.summands_.find(k);
    if (it == other.summands_.end() || !m.is_isomorphic_to(it->second))
      return false;
  }
  return true;
}

HomologyObject direct_sum(const HomologyObject& a, const HomologyObject& b) {
  require_same_ring(a.ring(), b.ring(), "direct_sum");
  std::map<int, FPModule> s = a.summands();
  for (const auto& [k, m] : b.summands()) {
    auto it = s.find(k);
    if (it == s.end())
      s.emplace(k, m);
    else
      it->second = direct_sum(it->second, m);
  }
  return HomologyObject(a.ring(), std::move(s));
}

FreeComplex::FreeComplex(RingSpec ring, int bottom,
                         std::vector<std::size_t> ranks,
                         std::vector<IntMatrix> differentials)
    : ring_(std::move(ring)),
      bottom_(bottom),
      ranks_(std::move(ranks)),
      diffs_(std::move(differentials)) {
  if (!ranks_.empty() && diffs_.size() != ranks_.size() - 1)
    throw SchemaError("complex needs exactly len(ranks)-1 differentials");
  if (ranks_.empty() && !diffs_.empty())
    throw SchemaError("zero complex admits no differentials");
  for (std::size_t i = 0; i < diffs_.size(); ++i) {
    if (diffs_[i].rows() != ranks_[i] || diffs_[i].cols() != ranks_[i + 1])
      throw SchemaError("differential shape mismatch at degree " +
                        std::to_string(bottom_ + static_cast<int>(i) + 1));
  }
  const Int& n = ring_.modulus();
  for (std::size_t i = 0; i + 1 < diffs_.size(); ++i) {
    IntMatrix dd = mul(diffs_[i], diffs_[i + 1]);
    if (!congruent_mod(dd, IntMatrix::zero(dd.rows(), dd.cols()), n))
      throw SchemaError("d o d != 0 at degree " +
                        std::to_string(bottom_ + static_cast<int>(i) + 2));
  }

  // Canonical form: strip zero ranks from both ends.
  while (!ranks_.empty() && ranks_.front() == 0) {
    ranks_.erase(ranks_.begin());
    if (!diffs_.empty()) diffs_.erase(diffs_.begin());
    ++bottom_;
  }
  while (!ranks_.empty() && ranks_.back() == 0) {
    ranks_.pop_back();
    if (!diffs_.empty()) diffs_.pop_back();
  }
  if (ranks_.empty()) {
    bottom_ = 0;
    diffs_.clear();
  }

  for (int k = bottom_; k <= top() && !ranks_.empty(); ++k) {
    IntMatrix kg = kernel_basis(differential(k), n);
    FPModule h = subquotient_module(ring_, kg, differential(k + 1));
    hdata_.emplace(k, std::make_pair(std::move(h), std::move(kg)));
  }
}

std::size_t FreeComplex::rank(int degree) const {
  if (ranks_.empty() || degree < bottom_ || degree > top()) return 0;
  return ranks_[static_cast<std::size_t>(degree - bottom_)];
}

IntMatrix FreeComplex::differential(int degree) const {
  if (!ranks_.empty() && degree > bottom_ && degree <= top())
    return diffs_[static_cast<std::size_t>(degree - bottom_ - 1)];
  return IntMatrix::zero(rank(degree - 1), rank(degree));
}

FPModule FreeComplex::homology_module(int degree) const {
  auto it = hdata_.find(degree);
  if (it == hdata_.end()) return FPModule::zero(ring_);
  return it->second.first;
}

const IntMatrix& FreeComplex::kernel_generators(int degree) const {
  static const IntMatrix empty(0, 0);
  auto it = hdata_.find(degree);
  if (it == hdata_.end()) return empty;
  return it->second.second;
}

HomologyObject FreeComplex::homology() const {
  std::map<int, FPModule> s;
  for (const auto& [k, hd] : hdata_)
    if (!hd.first.is_zero()) s.emplace(k, hd.first);
  return HomologyObject(ring_, std::move(s));
}

bool operator==(const FreeComplex& a, const FreeComplex& b) {
  return a.ring_ == b.ring_ && a.bottom_ == b.bottom_ && a.ranks_ == b.ranks_ &&
         a.diffs_ == b.diffs_;
}

ChainMap::ChainMap(FreeComplex source, FreeComplex target,
                   std::map<int, IntMatrix> components)
    : source_(std::move(source)),
      target_(std::move(target)),
      components_(std::move(components)) {
  require_same_ring(source_.ring(), target_.ring(), "ChainMap");
  for (auto it = components_.begin(); it != components_.end();) {
    const auto& [k, f] = *it;
    if (f.rows() != target_.rank(k) || f.cols() != source_.rank(k))
      throw SchemaError("chain map component shape mismatch at degree " +
                        std::to_string(k));
    if (f.is_zero())
      it = components_.erase(it);
    else
      ++it;
  }
  const Int& n = source_.ring().modulus();
  int lo = std::min(source_.bottom(), target_.bottom());
  int hi = std::max(source_.top(), target_.top()) + 1;
  for (int k = lo; k <= hi; ++k) {
    IntMatrix lhs = mul(component(k - 1), source_.differential(k));
    IntMatrix rhs = mul(target_.differential(k), component(k));
    if (!congruent_mod(lhs, rhs, n))
      throw SchemaError("chain map does not commute at degree " +
                        std::to_string(k));
  }
}

ChainMap ChainMap::identity(const FreeComplex& x) { return scalar(x, 1); }

ChainMap ChainMap::zero(const FreeComplex& source, const FreeComplex& target) {
  return ChainMap(source, target, {});
}

ChainMap ChainMap::scalar(const FreeComplex& x, const Int& c) {
  std::map<int, IntMatrix> comps;
  for (int k = x.bottom(); k <= x.top() && !x.is_zero(); ++k)
    comps.emplace(k, mul(c, IntMatrix::identity(x.rank(k))));
  return ChainMap(x, x, std::move(comps));
}

IntMatrix ChainMap::component(int degree) const {
  auto it = components_.find(degree);
  if (it != components_.end()) return it->second;
  return IntMatrix::zero(target_.rank(degree), source_.rank(degree));
}

ModuleValuedMap::ModuleValuedMap(FreeComplex source, int degree,
                                 FPModule target, IntMatrix matrix)
    : source_(std::move(source)),
      degree_(degree),
      target_(std::move(target)),
      matrix_(std::move(matrix)) {
  require_same_ring(source_.ring(), target_.ring(), "ModuleValuedMap");
  if (matrix_.rows() != target_.generators() ||
      matrix_.cols() != source_.rank(degree_))
    throw SchemaError("module-valued map shape mismatch");
  // The composite with d_{k+1} must land in the relation submodule.
  IntMatrix composite = mul(matrix_, source_.differential(degree_ + 1));
  if (!solve_matrix(target_.presentation(), composite,
                    source_.ring().modulus()))
    throw SchemaError("module-valued map does not kill boundaries");
}

FPModule InducedMap::kernel() const {
  const RingSpec& ring = source_h.ring();
  IntMatrix aug = hcat(matrix, target_h.presentation());
  if (ring.modulus() != 0)
    aug = hcat(aug, mul(ring.modulus(), IntMatrix::identity(matrix.rows())));
  IntMatrix preimage =
      kernel_basis(aug, Int(0)).top_rows(source_h.generators());
  return subquotient_module(ring, preimage, source_h.presentation());
}

FPModule InducedMap::cokernel() const {
  return FPModule(target_h.ring(), hcat(target_h.presentation(), matrix));
}

FreeComplex suspend(const FreeComplex& x, int shift) {
  // Negating differentials on odd shifts keeps d o d = 0 automatic under
  // the Koszul signs of tensor.
  Int sign = (shift % 2 == 0) ? 1 : -1;
  std::vector<IntMatrix> diffs;
  for (int k = x.bottom() + 1; k <= x.top(); ++k)
    diffs.push_back(mul(sign, x.differential(k)));
  return FreeComplex(x.ring(), x.bottom() + shift, x.ranks(),
                     std::move(diffs));
}

ConeResult cone(const ChainMap& f) {
  const FreeComplex& x = f.source();
  const FreeComplex& y = f.target();
  const RingSpec& ring = x.ring();

  if (x.is_zero() && y.is_zero()) {
    FreeComplex c = FreeComplex::zero(ring);
    return {c, ChainMap::zero(y, c), ChainMap::zero(c, suspend(x, 1))};
  }

  int lo = std::min(y.bottom(), x.bottom() + 1);
  int hi = std::max(y.top(), x.top() + 1);
  std::vector<std::size_t> ranks;
  for (int k = lo; k <= hi; ++k) ranks.push_back(y.rank(k) + x.rank(k - 1));

  std::vector<IntMatrix> diffs;
  for (int k = lo + 1; k <= hi; ++k) {
    IntMatrix d(y.rank(k - 1) + x.rank(k - 2), y.rank(k) + x.rank(k - 1));
    IntMatrix dy = y.differential(k);
    IntMatrix fx = f.component(k - 1);
    IntMatrix dx = x.differential(k - 1);
    for (std::size_t i = 0; i < dy.rows(); ++i)
      for (std::size_t j = 0; j < dy.cols(); ++j) d.at(i, j) = dy.at(i, j);
    for (std::size_t i = 0; i < fx.rows(); ++i)
      for (std::size_t j = 0; j < fx.cols(); ++j)
        d.at(i, y.rank(k) + j) = fx.at(i, j);
    for (std::size_t i = 0; i < dx.rows(); ++i)
      for (std::size_t j = 0; j < dx.cols(); ++j)
        d.at(y.rank(k - 1) + i, y.rank(k) + j) = -dx.at(i, j);
    diffs.push_back(std::move(d));
  }
  FreeComplex c(ring, lo, std::move(ranks), std::move(diffs));

  std::map<int, IntMatrix> incl;
  for (int k = y.bottom(); k <= y.top() && !y.is_zero(); ++k) {
    IntMatrix m(c.rank(k), y.rank(k));
    for (std::size_t i = 0; i < y.rank(k); ++i) m.at(i, i) = 1;
    incl.emplace(k, std::move(m));
  }
  ChainMap include_target(y, c, std::move(incl));

  FreeComplex sx = suspend(x, 1);
  std::map<int, IntMatrix> proj;
  for (int k = sx.bottom(); k <= sx.top() && !sx.is_zero(); ++k) {
    IntMatrix m(sx.rank(k), c.rank(k));
    for (std::size_t i = 0; i < sx.rank(k); ++i)
      m.at(i, y.rank(k) + i) = 1;
    proj.emplace(k, std::move(m));
  }
  ChainMap project(c, sx, std::move(proj));

  return {std::move(c), std::move(include_target), std::move(project)};
}

FreeComplex direct_sum(const std::vector<FreeComplex>& xs) {
  if (xs.empty()) throw SchemaError("direct_sum of empty list");
  const RingSpec& ring = xs.front().ring();
  for (const auto& x : xs) require_same_ring(ring, x.ring(), "direct_sum");

  bool all_zero = true;
  int lo = 0, hi = -1;
  for (const auto& x : xs) {
    if (x.is_zero()) continue;
    if (all_zero) {
      lo = x.bottom();
      hi = x.top();
      all_zero = false;
    } else {
      lo = std::min(lo, x.bottom());
      hi = std::max(hi, x.top());
    }
  }
  if (all_zero) return FreeComplex::zero(ring);

  std::vector<std::size_t> ranks;
  for (int k = lo; k <= hi; ++k) {
    std::size_t r = 0;
    for (const auto& x : xs) r += x.rank(k);
    ranks.push_back(r);
  }
  std::vector<IntMatrix> diffs;
  for (int k = lo + 1; k <= hi; ++k) {
    IntMatrix d(ranks[k - 1 - lo], ranks[k - lo]);
    std::size_t ro = 0, co = 0;
    for (const auto& x : xs) {
      IntMatrix dx = x.differential(k);
      for (std::size_t i = 0; i < dx.rows(); ++i)
        for (std::size_t j = 0; j < dx.cols(); ++j)
          d.at(ro + i, co + j) = dx.at(i, j);
      ro += x.rank(k - 1);
      co += x.rank(k);
    }
    diffs.push_back(std::move(d));
  }
  return FreeComplex(ring, lo, std::move(ranks), std::move(diffs));
}

FreeComplex hocolim(const FreeComplex& first,
                    const std::vector<ChainMap>& maps) {
  std::vector<FreeComplex> objects{first};
  for (std::size_t i = 0; i < maps.size(); ++i) {
    if (!(maps[i].source() == objects.back()))
      throw SchemaError("directed system does not compose at step " +
                        std::to_string(i));
    objects.push_back(maps[i].target());
  }
  if (maps.empty()) return first;

  std::vector<FreeComplex> head(objects.begin(), objects.end() - 1);
  FreeComplex domain = direct_sum(head);
  FreeComplex codomain = direct_sum(objects);

  // (inclusion - shift): X_i lands in itself minus its image in X_{i+1}.
  int lo = std::min(domain.bottom(), codomain.bottom());
  int hi = std::max(domain.top(), codomain.top());
  std::map<int, IntMatrix> comps;
  for (int k = lo; k <= hi; ++k) {
    IntMatrix m(codomain.rank(k), domain.rank(k));
    std::size_t dom_off = 0, cod_off = 0;
    for (std::size_t i = 0; i + 1 < objects.size(); ++i) {
      std::size_t r_i = objects[i].rank(k);
      for (std::size_t a = 0; a < r_i; ++a)
        m.at(cod_off + a, dom_off + a) = 1;
      IntMatrix fk = maps[i].component(k);
      std::size_t next_off = cod_off + r_i;
      for (std::size_t a = 0; a < fk.rows(); ++a)
        for (std::size_t b = 0; b < fk.cols(); ++b)
          m.at(next_off + a, dom_off + b) = -fk.at(a, b);
      dom_off += r_i;
      cod_off += r_i;
    }
    if (!m.is_zero()) comps.emplace(k, std::move(m));
  }
  ChainMap one_minus_shift(domain, codomain, std::move(comps));
  return cone(one_minus_shift).complex;
}

FreeComplex tensor(const FreeComplex& x, const FreeComplex& y) {
  require_same_ring(x.ring(), y.ring(), "tensor");
  if (x.is_zero() || y.is_zero()) return FreeComplex::zero(x.ring());

  int lo = x.bottom() + y.bottom();
  int hi = x.top() + y.top();

  // Offset of the (i, k-i) component within total degree k, ascending i.
  auto component_offsets = [&](int k) {
    std::vector<std::pair<int, std::size_t>> offs;  // (i, offset)
    std::size_t off = 0;
    for (int i = x.bottom(); i <= x.top(); ++i) {
      std::size_t r = x.rank(i) * y.rank(k - i);
      if (r > 0) offs.emplace_back(i, off);
      off += r;
    }
    return std::make_pair(offs, off);
  };

  std::vector<std::size_t> ranks;
  for (int k = lo; k <= hi; ++k) ranks.push_back(component_offsets(k).second);

  std::vector<IntMatrix> diffs;
  for (int k = lo + 1; k <= hi; ++k) {
    auto [src_offs, src_total] = component_offsets(k);
    auto [dst_offs, dst_total] = component_offsets(k - 1);
    auto dst_offset = [&](int i) -> std::optional<std::size_t> {
      for (const auto& [ii, off] : dst_offs)
        if (ii == i) return off;
      return std::nullopt;
    };
    IntMatrix d(dst_total, src_total);
    for (const auto& [i, soff] : src_offs) {
      int j = k - i;
      // d_x (x) 1 into component (i-1, j)
      if (auto doff = dst_offset(i - 1)) {
        IntMatrix block =
            kron(x.differential(i),
                 IntMatrix::identity(y.rank(j)));
        for (std::size_t a = 0; a < block.rows(); ++a)
          for (std::size_t b = 0; b < block.cols(); ++b)
            d.at(*doff + a, soff + b) = block.at(a, b);
      }
      // (-1)^i 1 (x) d_y into component (i, j-1)
      if (auto doff = dst_offset(i)) {
        Int sign = (i % 2 == 0) ? 1 : -1;
        IntMatrix block = mul(
            sign, kron(IntMatrix::identity(x.rank(i)), y.differential(j)));
        for (std::size_t a = 0; a < block.rows(); ++a)
          for (std::size_t b = 0; b < block.cols(); ++b)
            d.at(*doff + a, soff + b) = block.at(a, b);
      }
    }
    diffs.push_back(std::move(d));
  }
  return FreeComplex(x.ring(), lo, std::move(ranks), std::move(diffs));
}

FreeComplex module_to_complex(const FPModule& m, int degree) {
  const RingSpec& ring = m.ring();
  if (!ring.is_integers()) {
    // Z/n-modules generally admit no bounded free resolution (Z/2 over Z/4
    // has a periodic one); only free modules embed as complexes.
    if (!m.normal_form().invariant_factors.empty())
      throw UnresolvableOverQuotientRing(
          "no bounded free resolution over " + ring.str() + " for " +
          m.normal_form().str());
    std::size_t g = m.normal_form().free_rank;
    return FreeComplex(ring, degree, {g}, {});
  }
  // Over Z, prune the presentation to an independent relation basis: the
  // nonzero columns of pres*v form a lattice basis of the relation image.
  const IntMatrix& pres = m.presentation();
  SNFResult r = snf(pres);
  IntMatrix pv = mul(pres, r.v);
  std::size_t rank = r.rank();
  IntMatrix b(pres.rows(), rank);
  for (std::size_t i = 0; i < pres.rows(); ++i)
    for (std::size_t j = 0; j < rank; ++j) b.at(i, j) = pv.at(i, j);
  return FreeComplex(ring, degree, {pres.rows(), rank}, {std::move(b)});
}

InducedMap induced_map_at(const ChainMap& f, int degree) {
  const RingSpec& ring = f.source().ring();
  FPModule source_h = f.source().homology_module(degree);
  FPModule target_h = f.target().homology_module(degree);
  const IntMatrix& kx = f.source().kernel_generators(degree);
  const IntMatrix& ky = f.target().kernel_generators(degree);
  IntMatrix image = kx.cols() == 0
                        ? IntMatrix::zero(f.target().rank(degree), 0)
                        : mul(f.component(degree), kx);
  auto sol = solve_matrix(ky, image, ring.modulus());
  if (!sol)
    throw InvariantViolation("chain map image of cycles escaping cycles");
  return InducedMap{std::move(source_h), std::move(target_h),
                    std::move(*sol)};
}

std::map<int, InducedMap> induced_homology_maps(const ChainMap& f) {
  int lo = std::min(f.source().bottom(), f.target().bottom());
  int hi = std::max(f.source().top(), f.target().top());
  std::map<int, InducedMap> out;
  for (int k = lo; k <= hi; ++k) out.emplace(k, induced_map_at(f, k));
  return out;
}

ModuleValuedMap quotient_map_to_bottom_homology(const FreeComplex& x, int k) {
  for (int i = x.bottom(); i < k; ++i)
    if (!x.homology_module(i).is_zero())
      throw HypothesisFailed("H_" + std::to_string(i) +
                             " is nonzero below degree " + std::to_string(k));

  const RingSpec& ring = x.ring();
  FPModule h = x.homology_module(k);
  const IntMatrix& kg = x.kernel_generators(k);
  std::size_t q = h.generators();
  std::size_t rk = x.rank(k);

  // Solve M * kg = I_q modulo the relations of H_k: vanishing homology
  // below k makes ker d_k a direct summand of X_k, so the canonical
  // projection on cycles extends to all of X_k.
  IntMatrix m(q, rk);
  if (q > 0) {
    const IntMatrix& rel = h.presentation();
    IntMatrix sys = kron(transpose(kg), IntMatrix::identity(q));
    sys = hcat(sys, kron(IntMatrix::identity(q), rel));
    if (ring.modulus() != 0)
      sys = hcat(sys, mul(ring.modulus(), IntMatrix::identity(q * q)));
    std::vector<Int> rhs(q * q);
    for (std::size_t j = 0; j < q; ++j) rhs[j * q + j] = 1;
    auto sol = solve_linear(sys, rhs, Int(0));
    if (!sol)
      throw InvariantViolation(
          "cycle projection does not extend; hypothesis check is broken");
    for (std::size_t j = 0; j < rk; ++j)
      for (std::size_t i = 0; i < q; ++i) m.at(i, j) = (*sol)[j * q + i];
  }

  ModuleValuedMap result(x, k, std::move(h), std::move(m));
  // Postcondition: the induced map on H_k is an isomorphism.
  InducedMap induced = induced_map_of(result);
  if (!induced.kernel().is_zero() || !induced.cokernel().is_zero())
    throw InvariantViolation("quotient map is not an H_k-isomorphism");
  return result;
}

InducedMap induced_map_of(const ModuleValuedMap& f) {
  FPModule source_h = f.source().homology_module(f.degree());
  const IntMatrix& kg = f.source().kernel_generators(f.degree());
  IntMatrix matrix = kg.cols() == 0 ? IntMatrix::zero(f.target().generators(), 0)
                                    : mul(f.matrix(), kg);
  return InducedMap{std::move(source_h), f.target(), std::move(matrix)};
}

bool verify_local_h_iso(const ChainMap& f, int k, const PrimeIdeal& p) {
  InducedMap induced = induced_map_at(f, k);
  return !supp_contains(induced.kernel().support(), p) &&
         !supp_contains(induced.cokernel().support(), p);
}

bool verify_local_h_iso(const ModuleValuedMap& f, const PrimeIdeal& p) {
  InducedMap induced = induced_map_of(f);
  return !supp_contains(induced.kernel().support(), p) &&
         !supp_contains(induced.cokernel().support(), p);
}

EulerCharacteristics euler_characteristics(const FreeComplex& x) {
  EulerCharacteristics out;
  out.chi_free = 0;
  for (int k = x.bottom(); k <= x.top() && !x.is_zero(); ++k) {
    Int r = static_cast<long long>(x.rank(k));
    out.chi_free += (k % 2 == 0) ? r : -r;
  }
  out.homology_finite = true;
  for (int k = x.bottom(); k <= x.top() && !x.is_zero(); ++k) {
    auto o = x.homology_module(k).order();
    if (!o) {
      out.homology_finite = false;
      return out;
    }
    // k may be negative; (k % 2) in C++ keeps the sign of k.
    if (k % 2 == 0)
      out.num *= *o;
    else
      out.den *= *o;
  }
  Int g = gcd(out.num, out.den);
  out.num /= g;
  out.den /= g;
  return out;
}

const RingSpec& object_ring(const Object& obj) {
  return std::visit([](const auto& o) -> const RingSpec& { return o.ring(); },
                    obj);
}

HomologyObject to_homology(const Object& obj) {
  if (std::holds_alternative<FreeComplex>(obj))
    return std::get<FreeComplex>(obj).homology();
  return std::get<HomologyObject>(obj);
}

}  // namespace homcell
