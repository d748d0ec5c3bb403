#include "gaussmap/gaussian.hpp"

#include "gaussmap/errors.hpp"

namespace gaussmap {

namespace {

/// sum_j a_ij g_j for each i, the "half contraction" of the quadric with a
/// coefficient family; reused so the double sum costs g products, not g^2.
std::vector<FFElement> contract(const RatMatrix& a,
                                const std::vector<FFElement>& g) {
  std::vector<FFElement> out;
  out.reserve(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    FFElement acc = FFElement::zero(g.front().curve());
    for (std::size_t j = 0; j < g.size(); ++j) {
      const Rational& c = a.at(i, j);
      if (is_zero(c)) continue;
      acc = acc + RatFunc(c) * g[j];
    }
    out.push_back(std::move(acc));
  }
  return out;
}

FFElement dot(const std::vector<FFElement>& a,
              const std::vector<FFElement>& b) {
  FFElement acc = FFElement::zero(a.front().curve());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero() || b[i].is_zero()) continue;
    acc = acc + a[i] * b[i];
  }
  return acc;
}

std::vector<FFElement> elements_of(const std::vector<KForm>& forms) {
  std::vector<FFElement> f;
  f.reserve(forms.size());
  for (const KForm& w : forms) f.push_back(w.elt);
  return f;
}

std::vector<FFElement> derive_all(const std::vector<FFElement>& f) {
  std::vector<FFElement> d;
  d.reserve(f.size());
  for (const FFElement& e : f) d.push_back(ff_derive(e));
  return d;
}

KForm mu2_with(const QuadricForm& q, const std::vector<FFElement>& f,
               const std::vector<FFElement>& f1,
               const std::vector<FFElement>& f2) {
  std::vector<FFElement> v = contract(q.matrix, f);
  if (!dot(f, v).is_zero()) {
    throw NotInI2Error("quadric fails the membership identity");
  }
  FFElement second = dot(f2, v);
  std::vector<FFElement> w = contract(q.matrix, f1);
  FFElement first = dot(f1, w);
  if (second + first != FFElement::zero(q.curve)) {
    throw InternalError("the two local formulas for mu2 disagree");
  }
  return {std::move(second), 4};
}

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> symmetric_pairs(
    std::size_t g) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(g * (g + 1) / 2);
  for (std::size_t i = 0; i < g; ++i) {
    for (std::size_t j = i; j < g; ++j) pairs.emplace_back(i, j);
  }
  return pairs;
}

std::vector<QuadricForm> i2_from_forms(const std::vector<KForm>& forms) {
  if (forms.empty()) throw CurveError("i2_from_forms needs a family");
  const CurvePtr& curve = forms.front().elt.curve();
  const std::size_t g = forms.size();
  const auto pairs = symmetric_pairs(g);

  std::vector<KForm> products;
  products.reserve(pairs.size());
  for (auto [i, j] : pairs) {
    products.push_back(forms[i] * forms[j]);
  }
  RatMatrix coords = coordinatize(products);
  std::vector<std::vector<Rational>> kernel =
      kernel_basis(coords.transposed());

  std::vector<QuadricForm> quadrics;
  quadrics.reserve(kernel.size());
  for (const auto& vec : kernel) {
    RatMatrix a(g, g);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      auto [i, j] = pairs[k];
      if (i == j) {
        a.at(i, i) = vec[k];
      } else {
        Rational half = vec[k] / 2;
        a.at(i, j) = half;
        a.at(j, i) = half;
      }
    }
    quadrics.push_back({curve, std::move(a)});
  }
  for (const QuadricForm& q : quadrics) {
    if (!i2_membership(q, forms)) {
      throw InternalError("kernel vector fails the membership identity");
    }
  }
  return quadrics;
}

std::vector<QuadricForm> i2_basis(const CurvePtr& curve) {
  if (curve->genus() < 3) throw CurveError("i2_basis needs genus >= 3");
  return i2_from_forms(canonical_basis(curve).forms);
}

bool i2_membership(const QuadricForm& q, const std::vector<KForm>& forms) {
  std::vector<FFElement> f = elements_of(forms);
  if (q.matrix.rows() != f.size() || q.matrix.cols() != f.size()) {
    throw InternalError("quadric matrix size disagrees with the family");
  }
  return dot(f, contract(q.matrix, f)).is_zero();
}

bool i2_membership(const QuadricForm& q) {
  return i2_membership(q, canonical_basis(q.curve).forms);
}

GaussMapImage mu1(const std::vector<KForm>& sections,
                  const std::string& source) {
  if (sections.size() < 2) {
    throw DependentSectionsError("mu1 needs at least two sections");
  }
  const long w = sections.front().weight;
  if (rank_fast(coordinatize(sections)) !=
      static_cast<long>(sections.size())) {
    throw DependentSectionsError("mu1 sections are linearly dependent");
  }
  std::vector<FFElement> g, g1;
  g.reserve(sections.size());
  for (const KForm& s : sections) g.push_back(s.elt);
  g1 = derive_all(g);

  GaussMapImage out;
  out.source = source;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      out.images.push_back({g[i] * g1[j] - g[j] * g1[i], 2 * w + 1});
    }
  }
  out.rank = rank_fast(coordinatize(out.images));
  return out;
}

GaussMapImage mu1_restricted(const CurvePtr& curve) {
  return mu1(subsystem_K_minus_F(canonical_basis(curve)), "mu1(K-F)");
}

Mu2Evaluator::Mu2Evaluator(const std::vector<KForm>& forms)
    : f_(elements_of(forms)), f1_(derive_all(f_)), f2_(derive_all(f1_)) {}

KForm Mu2Evaluator::operator()(const QuadricForm& q) const {
  if (q.matrix.rows() != f_.size() || q.matrix.cols() != f_.size()) {
    throw InternalError("quadric matrix size disagrees with the family");
  }
  return mu2_with(q, f_, f1_, f2_);
}

KForm mu2(const QuadricForm& q) {
  return Mu2Evaluator(canonical_basis(q.curve).forms)(q);
}

GaussMapImage mu2_image(const std::vector<QuadricForm>& quadrics,
                        const std::vector<KForm>& forms) {
  GaussMapImage out;
  out.source = "mu2(I2)";
  if (quadrics.empty()) return out;
  Mu2Evaluator eval(forms);
  for (const QuadricForm& q : quadrics) {
    if (!q.curve->same_as(*quadrics.front().curve)) {
      throw CurveError("mu2_image quadrics live on different curves");
    }
    out.images.push_back(eval(q));
  }
  out.rank = rank_fast(coordinatize(out.images));
  return out;
}

GaussMapImage mu2_image(const std::vector<QuadricForm>& quadrics) {
  if (quadrics.empty()) return mu2_image(quadrics, {});
  return mu2_image(quadrics,
                   canonical_basis(quadrics.front().curve).forms);
}

GaussMapImage rank_mu2(const CurvePtr& curve) {
  return mu2_image(i2_basis(curve));
}

}  // namespace gaussmap
