#include "twgr/derivation.hpp"

#include <numeric>

#include "twgr/error.hpp"

namespace twgr {

namespace {

bool all_zero(std::span<const Fq> v) {
  for (auto x : v)
    if (x.code != 0) return false;
  return true;
}

void add_into(const Field& f, Vec& dst, std::span<const Fq> src) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = f.add(dst[i], src[i]);
}

void scale_in_place(const Field& f, Vec& v, Fq c) {
  for (auto& x : v) x = f.mul(c, x);
}

void check_vec(const TwistedRing& r, const Vec& v) {
  if (v.size() != r.dim()) throw InvalidInput("image has the wrong length");
  for (auto c : v) {
    if (c.code >= r.field()->q()) throw InvalidInput("coefficient outside the field");
  }
}

}  // namespace

GeneratorMap::GeneratorMap(RingPtr ring, std::vector<Vec> images)
    : ring_(std::move(ring)), images_(std::move(images)) {
  if (!ring_) throw InvalidInput("generator map needs a ring");
  if (images_.size() != ring_->group()->generators().size()) {
    throw InvalidInput("generator map needs one image per generator");
  }
  for (const auto& v : images_) check_vec(*ring_, v);
}

GeneratorMap GeneratorMap::zero(RingPtr ring) {
  const std::size_t k = ring->group()->generators().size();
  const std::size_t n = ring->dim();
  return GeneratorMap(std::move(ring), std::vector<Vec>(k, Vec(n, Fq{0})));
}

GeneratorMap GeneratorMap::from_flat(RingPtr ring, std::span<const Fq> flat) {
  const std::size_t k = ring->group()->generators().size();
  const std::size_t n = ring->dim();
  if (flat.size() != k * n) throw InvalidInput("flat generator map has the wrong length");
  std::vector<Vec> images;
  for (std::size_t j = 0; j < k; ++j) images.emplace_back(flat.begin() + j * n, flat.begin() + (j + 1) * n);
  return GeneratorMap(std::move(ring), std::move(images));
}

RingElem GeneratorMap::image(std::size_t generator) const {
  return ring_->element(images_.at(generator));
}

Vec GeneratorMap::flatten() const {
  Vec out;
  for (const auto& v : images_) out.insert(out.end(), v.begin(), v.end());
  return out;
}

Derivation::Derivation(RingPtr ring, std::vector<Vec> images, bool verified)
    : ring_(std::move(ring)), images_(std::move(images)), verified_(verified) {
  if (!ring_) throw InvalidInput("derivation needs a ring");
  if (images_.size() != ring_->dim()) throw InvalidInput("derivation needs one image per basis element");
  for (const auto& v : images_) check_vec(*ring_, v);
}

Derivation Derivation::from_flat(RingPtr ring, std::span<const Fq> flat, bool verified) {
  const std::size_t n = ring->dim();
  if (flat.size() != n * n) throw InvalidInput("flat derivation has the wrong length");
  std::vector<Vec> images;
  for (std::size_t g = 0; g < n; ++g) images.emplace_back(flat.begin() + g * n, flat.begin() + (g + 1) * n);
  return Derivation(std::move(ring), std::move(images), verified);
}

RingElem Derivation::image(GroupElem g) const { return ring_->element(images_.at(g)); }

RingElem Derivation::apply(const RingElem& x) const {
  if (x.ring() != ring_) throw ContextMismatch("element is not in the derivation's ring");
  const Field& f = *ring_->field();
  Vec out(ring_->dim(), Fq{0});
  for (std::size_t g = 0; g < ring_->dim(); ++g) {
    const Fq c = x.coeffs()[g];
    if (c.code == 0) continue;
    for (std::size_t h = 0; h < out.size(); ++h) out[h] = f.add(out[h], f.mul(c, images_[g][h]));
  }
  return ring_->element(std::move(out));
}

Vec Derivation::flatten() const {
  Vec out;
  out.reserve(images_.size() * images_.size());
  for (const auto& v : images_) out.insert(out.end(), v.begin(), v.end());
  return out;
}

GeneratorMap Derivation::restrict_to_generators() const {
  std::vector<Vec> images;
  for (GroupElem s : ring_->group()->generators()) images.push_back(images_[s]);
  return GeneratorMap(ring_, std::move(images));
}

std::vector<Vec> letter_images(const TwistedRing& ring, std::span<const Vec> generator_images) {
  const Group& G = *ring.group();
  const Field& f = *ring.field();
  const auto& gens = G.generators();
  std::vector<Vec> out(2 * gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const GroupElem s = gens[i];
    const GroupElem si = G.inv(s);
    out[i] = generator_images[i];
    Vec v = ring.mul_basis_right(ring.mul_basis_left(si, generator_images[i]), si);
    scale_in_place(f, v, f.neg(f.inv(ring.cocycle()(s, si))));
    out[gens.size() + i] = std::move(v);
  }
  return out;
}

Vec word_derivative(const TwistedRing& ring, const Word& w, std::span<const Vec> letters) {
  const Group& G = *ring.group();
  const Field& f = *ring.field();
  const Cocycle& al = ring.cocycle();
  const std::size_t k = w.size();
  const std::size_t ngen = G.generators().size();
  Vec out(ring.dim(), Fq{0});
  if (k == 0) return out;

  std::vector<GroupElem> val(k);
  for (std::size_t i = 0; i < k; ++i) val[i] = G.letter_value(w[i]);

  // The product of letters i+1..k-1 is suf_c[i] times the basis element suf_e[i].
  std::vector<GroupElem> suf_e(k);
  std::vector<Fq> suf_c(k);
  suf_e[k - 1] = G.identity();
  suf_c[k - 1] = f.one();
  for (std::size_t i = k - 1; i-- > 0;) {
    suf_c[i] = f.mul(suf_c[i + 1], al(val[i + 1], suf_e[i + 1]));
    suf_e[i] = G.mul(val[i + 1], suf_e[i + 1]);
  }

  GroupElem pre_e = G.identity();
  Fq pre_c = f.one();
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t slot = w[i].inverse ? ngen + w[i].generator : w[i].generator;
    const Vec& img = letters[slot];
    if (!all_zero(img)) {
      Vec term = ring.mul_basis_left(pre_e, ring.mul_basis_right(img, suf_e[i]));
      scale_in_place(f, term, f.mul(pre_c, suf_c[i]));
      add_into(f, out, term);
    }
    pre_c = f.mul(pre_c, al(pre_e, val[i]));
    pre_e = G.mul(pre_e, val[i]);
  }
  return out;
}

ExtendResult extend(const GeneratorMap& fmap) {
  const RingPtr& ring = fmap.ring();
  const Group& G = *ring->group();
  const Field& f = *ring->field();
  const auto letters = letter_images(*ring, fmap.images());

  for (std::size_t t = 0; t < G.relators().size(); ++t) {
    Vec res = word_derivative(*ring, G.relators()[t], letters);
    if (!all_zero(res)) return Rejection{t, G.format_word(G.relators()[t]), std::move(res)};
  }

  std::vector<Vec> images(G.order());
  for (std::size_t g = 0; g < G.order(); ++g) {
    const Word& w = G.word(g);
    images[g] = word_derivative(*ring, w, letters);
    scale_in_place(f, images[g], f.inv(beta_of_word(ring->cocycle(), w)));
  }
  Derivation d(ring, std::move(images));
  if (!is_derivation(d)) {
    throw InternalError("extension passed every relator but violates the Leibniz rule");
  }
  return Derivation(ring, d.images(), true);
}

bool is_derivation(const Derivation& d) {
  const TwistedRing& r = *d.ring();
  const Group& G = *r.group();
  const Field& f = *r.field();
  const Cocycle& al = r.cocycle();
  const std::size_t n = r.dim();
  const auto& img = d.images();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      Vec rhs = r.mul_basis_right(img[a], b);
      add_into(f, rhs, r.mul_basis_left(a, img[b]));
      const Fq c = al(a, b);
      const Vec& lhs = img[G.mul(a, b)];
      for (std::size_t i = 0; i < n; ++i) {
        if (f.mul(c, lhs[i]) != rhs[i]) return false;
      }
    }
  }
  return true;
}

Derivation inner_derivation(const RingElem& a) {
  const TwistedRing& r = *a.ring();
  const Field& f = *r.field();
  std::vector<Vec> images(r.dim());
  for (std::size_t g = 0; g < r.dim(); ++g) {
    Vec v = r.mul_basis_right(a.coeffs(), g);
    const Vec right = r.mul_basis_left(g, a.coeffs());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.sub(v[i], right[i]);
    images[g] = std::move(v);
  }
  return Derivation(a.ring(), std::move(images), true);
}

DerSpace der_space_generators(const RingPtr& ring) {
  const Group& G = *ring->group();
  const std::size_t n = G.order();
  const std::size_t k = G.generators().size();
  const std::size_t nrel = G.relators().size();

  Matrix m(ring->field(), nrel * n, k * n);
  std::vector<Vec> unit(k, Vec(n, Fq{0}));
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t h = 0; h < n; ++h) {
      unit[j][h] = Fq{1};
      const auto letters = letter_images(*ring, unit);
      for (std::size_t t = 0; t < nrel; ++t) {
        const Vec col = word_derivative(*ring, G.relators()[t], letters);
        for (std::size_t i = 0; i < n; ++i) m(t * n + i, j * n + h) = col[i];
      }
      unit[j][h] = Fq{0};
    }
  }
  auto basis = kernel_basis(m);
  const std::size_t dim = basis.size();
  return DerSpace{dim, std::move(basis), std::move(m)};
}

bool satisfies_constraints(const DerSpace& der, const GeneratorMap& f) {
  return all_zero(der.constraints.apply(f.flatten()));
}

OracleSpace der_space_oracle(const RingPtr& ring, std::size_t bound) {
  const Group& G = *ring->group();
  const Field& f = *ring->field();
  const Cocycle& al = ring->cocycle();
  const std::size_t n = G.order();
  if (n > bound) {
    throw InvalidInput("oracle limited to |G| <= " + std::to_string(bound) + ", got " +
                       std::to_string(n));
  }
  // x[g n + h] is the coefficient of h-bar in d(g-bar). For each pair (a, b)
  // and output k: alpha(a,b) x[ab, k] - alpha(k b^-1, b) x[a, k b^-1]
  //   - alpha(a, a^-1 k) x[b, a^-1 k] = 0.
  RowEchelon ech(ring->field(), n * n);
  Vec row(n * n, Fq{0});
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const GroupElem ab = G.mul(a, b);
      for (std::size_t k = 0; k < n; ++k) {
        const GroupElem h1 = G.mul(k, G.inv(b));
        const GroupElem h2 = G.mul(G.inv(a), k);
        const std::size_t c0 = ab * n + k, c1 = a * n + h1, c2 = b * n + h2;
        row[c0] = f.add(row[c0], al(a, b));
        row[c1] = f.sub(row[c1], al(h1, b));
        row[c2] = f.sub(row[c2], al(a, h2));
        ech.insert(row);
        row[c0] = row[c1] = row[c2] = Fq{0};
      }
    }
  }
  OracleSpace out;
  for (auto& v : ech.kernel_basis()) out.basis.push_back(Derivation::from_flat(ring, v, true));
  out.dim = out.basis.size();
  return out;
}

InnSpace inn_space(const RingPtr& ring) {
  const std::size_t n = ring->dim();
  const auto center = center_basis(ring);
  RowEchelon ech(ring->field(), n);
  for (const auto& z : center) ech.insert(z.coeffs());

  InnSpace out;
  out.center_dim = center.size();
  for (std::size_t g = 0; g < n; ++g) {
    Vec e(n, Fq{0});
    e[g] = Fq{1};
    if (!ech.insert(std::move(e))) continue;
    out.representatives.push_back(g);
    out.basis.push_back(inner_derivation(ring->basis(g)));
  }
  out.dim = out.basis.size();
  if (out.dim + out.center_dim != n) throw InternalError("center complement has the wrong size");

  std::vector<Vec> flat;
  for (const auto& d : out.basis) flat.push_back(d.flatten());
  if (rank_of(ring->field(), flat, n * n) != out.dim) {
    throw InternalError("inner derivations of a center complement are dependent");
  }
  return out;
}

bool is_inner(const GeneratorMap& fmap, const InnSpace& inn) {
  std::vector<Vec> restricted;
  for (const auto& d : inn.basis) restricted.push_back(d.restrict_to_generators().flatten());
  const Vec v = fmap.flatten();
  return in_span(fmap.ring()->field(), restricted, v);
}

HH1 hh1(const RingPtr& ring) {
  HH1 out{0, der_space_generators(ring), inn_space(ring), {}};
  const std::size_t width = out.der.constraints.cols();

  RowEchelon ech(ring->field(), width);
  for (const auto& d : out.inn.basis) {
    const GeneratorMap g = d.restrict_to_generators();
    if (!satisfies_constraints(out.der, g)) {
      throw InternalError("inner derivation violates the relator constraints");
    }
    if (!ech.insert(g.flatten())) {
      throw InternalError("inner derivations are dependent on the generators");
    }
  }
  for (const auto& v : out.der.basis) {
    if (ech.insert(v)) out.representatives.push_back(GeneratorMap::from_flat(ring, v));
  }
  if (out.der.dim < out.inn.dim || out.representatives.size() != out.der.dim - out.inn.dim) {
    throw InternalError("inner derivations are not contained in the derivation space");
  }
  out.dim = out.representatives.size();
  return out;
}

PartialBasis abelian_partial_basis(const RingPtr& ring, std::size_t oracle_bound) {
  const Group& G = *ring->group();
  const Field& f = *ring->field();
  if (G.kind() != GroupKind::Abelian) {
    throw InvalidInput("abelian_partial_basis needs a group built as a product of cyclic groups");
  }
  const std::size_t p = f.p();
  const auto& orders = G.abelian_orders();

  // C_m = C_{p^e} x C_u with y = x^u of order p^e and z = x^{p^e} of order u.
  std::vector<GroupElem> ys, zs;
  std::vector<std::size_t> y_ord, z_ord;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    std::size_t pe = 1, u = orders[i];
    while (u % p == 0) {
      u /= p;
      pe *= p;
    }
    const GroupElem x = G.generators()[i];
    if (pe > 1) {
      ys.push_back(G.pow(x, static_cast<long>(u)));
      y_ord.push_back(pe);
    }
    if (u > 1) {
      zs.push_back(G.pow(x, static_cast<long>(pe)));
      z_ord.push_back(u);
    }
  }
  std::vector<GroupElem> gens = ys;
  gens.insert(gens.end(), zs.begin(), zs.end());
  std::vector<std::size_t> gen_ord = y_ord;
  gen_ord.insert(gen_ord.end(), z_ord.begin(), z_ord.end());
  std::vector<Word> relators;
  for (std::size_t i = 0; i < gens.size(); ++i) relators.push_back(Word(gen_ord[i], Letter{i, false}));
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      relators.push_back({{i, true}, {j, true}, {i, false}, {j, false}});

  const auto center = alpha_center(ring->cocycle());
  std::vector<char> in_center(G.order(), 0);
  for (auto z : center) in_center[z] = 1;
  for (std::size_t g = 0; g < G.order(); ++g) {
    if (std::gcd(G.element_order(g), p) == 1 && !in_center[g]) {
      throw InvalidInput("p'-part of the group is not inside the alpha-center (element " + G.name(g) + ")");
    }
  }

  auto regrouped = std::make_shared<const Group>(G.with_presentation(gens, relators));
  const RingPtr ring2 =
      TwistedRing::make(Cocycle(regrouped, ring->field(), ring->cocycle().table()));

  PartialBasis out;
  out.p_generators = ys.size();
  out.all_verified = true;
  for (std::size_t i = 0; i < ys.size(); ++i) {
    std::vector<Vec> images(gens.size(), Vec(G.order(), Fq{0}));
    images[i][G.identity()] = Fq{1};
    ExtendResult r = extend(GeneratorMap(ring2, std::move(images)));
    if (auto* rej = std::get_if<Rejection>(&r)) {
      throw InvalidInput("partial derivative " + std::to_string(i + 1) + " violates relator " +
                         rej->relator_text);
    }
    const Derivation& di = std::get<Derivation>(r);
    for (std::size_t g = 0; g < G.order(); ++g) {
      std::vector<Vec> gi(G.order());
      for (std::size_t x = 0; x < G.order(); ++x) gi[x] = ring->mul_basis_left(g, di.images()[x]);
      Derivation d(ring, std::move(gi));
      const bool ok = is_derivation(d);
      out.all_verified = out.all_verified && ok;
      out.derivations.emplace_back(ring, d.images(), ok);
    }
  }

  std::vector<Vec> flat;
  for (const auto& d : out.derivations) flat.push_back(d.flatten());
  const std::size_t n2 = G.order() * G.order();
  out.independent = rank_of(ring->field(), flat, n2) == flat.size();

  if (G.order() <= oracle_bound) {
    const OracleSpace oracle = der_space_oracle(ring, oracle_bound);
    out.oracle_dim = oracle.dim;
    bool spans = out.all_verified && out.independent;
    for (const auto& d : oracle.basis) {
      if (!spans) break;
      spans = in_span(ring->field(), flat, d.flatten());
    }
    out.spans_oracle = spans;
  }
  return out;
}

}  // namespace twgr
