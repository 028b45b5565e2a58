#include "altring/structure.hpp"

#include <functional>
#include <map>
#include <type_traits>

namespace altring {

namespace {

template <ScalarField F>
using Span = std::span<const typename F::Element>;

template <ScalarField F>
constexpr bool kFinite = std::is_same_v<F, PrimeField>;

// { x in U : g(x) = 0 } for a linear g given by its values on U's basis.
template <ScalarField F>
Subspace<F> kernel_in(const F& f, const Subspace<F>& u,
                      const std::function<Vec<F>(Span<F>)>& g) {
  const std::size_t n = u.ambient_dim();
  if (u.is_zero()) return Subspace<F>(f, n);
  std::vector<Vec<F>> images;
  for (const auto& b : u.basis()) images.push_back(g(b));
  const std::size_t rows = images.front().size();
  if (rows == 0) return u;
  auto m = Matrix<F>::from_columns(f, rows, images);
  std::vector<Vec<F>> vs;
  for (const auto& c : nullspace(f, m)) vs.push_back(u.combine(c));
  return Subspace<F>::span(f, n, vs);
}

template <ScalarField F>
Vec<F> concat_products(const Ring<F>& r, Span<F> x, const Subspace<F>& v, bool x_on_left) {
  Vec<F> out;
  for (const auto& b : v.basis()) {
    auto p = x_on_left ? r.mul(x, b) : r.mul(b, x);
    out.insert(out.end(), p.begin(), p.end());
  }
  return out;
}

template <ScalarField F>
Json element_count(const F& f, std::size_t dim) {
  if constexpr (kFinite<F>) {
    auto s = space_size(f, dim);
    if (s) return *s;
    return "overflow";
  } else {
    return dim == 0 ? Json(1) : Json("infinite");
  }
}

std::string cell_name(int i, int j) { return "R" + std::to_string(i) + std::to_string(j); }

}  // namespace

std::string_view to_string(IdempotentKind kind) {
  switch (kind) {
    case IdempotentKind::Zero: return "zero";
    case IdempotentKind::Trivial: return "trivial";
    case IdempotentKind::Nontrivial: return "nontrivial";
  }
  return "unknown";
}

// ---- centre, nucleus, commutators -----------------------------------------

template <ScalarField F>
Subspace<F> center(const Ring<F>& r) {
  const auto& f = r.field();
  auto whole = Subspace<F>::whole(f, r.dim());
  return kernel_in<F>(f, whole, [&](Span<F> z) {
    Vec<F> out;
    for (std::size_t i = 0; i < r.dim(); ++i) {
      auto c = r.commutator(z, r.basis_vec(i));
      out.insert(out.end(), c.begin(), c.end());
    }
    return out;
  });
}

template <ScalarField F>
Subspace<F> nucleus(const Ring<F>& r) {
  const auto& f = r.field();
  auto whole = Subspace<F>::whole(f, r.dim());
  return kernel_in<F>(f, whole, [&](Span<F> m) {
    Vec<F> out;
    for (std::size_t i = 0; i < r.dim(); ++i) {
      for (std::size_t j = 0; j < r.dim(); ++j) {
        auto x = r.basis_vec(i), y = r.basis_vec(j);
        for (const auto& a : {r.associator(x, y, m), r.associator(x, m, y), r.associator(m, x, y)}) {
          out.insert(out.end(), a.begin(), a.end());
        }
      }
    }
    return out;
  });
}

template <ScalarField F>
Subspace<F> commutator_span(const Ring<F>& r) {
  std::vector<Vec<F>> vs;
  for (std::size_t i = 0; i < r.dim(); ++i) {
    for (std::size_t j = i + 1; j < r.dim(); ++j) {
      vs.push_back(r.commutator(r.basis_vec(i), r.basis_vec(j)));
    }
  }
  return Subspace<F>::span(r.field(), r.dim(), vs);
}

// ---- idempotents -----------------------------------------------------------

namespace {

template <ScalarField F>
IdempotentKind classify(const Ring<F>& r, const Vec<F>& e) {
  if (is_zero_vec(r.field(), Span<F>(e))) return IdempotentKind::Zero;
  if (e == r.unit()) return IdempotentKind::Trivial;
  return IdempotentKind::Nontrivial;
}

}  // namespace

std::vector<Idempotent<PrimeField>> idempotents(const Ring<PrimeField>& r, std::uint64_t budget) {
  auto size = space_size(r.field(), r.dim());
  if (!size) require_budget(~std::uint64_t{0}, budget, "idempotent enumeration");
  require_budget(*size, budget, "idempotent enumeration of " + r.name());
  ElementSpace space(r.field(), r.dim());
  std::vector<Idempotent<PrimeField>> out;
  for (std::uint64_t i = 0; i < space.size(); ++i) {
    auto e = space.at(i);
    if (r.mul(e, e) == e) {
      auto kind = classify(r, e);
      out.push_back({std::move(e), kind});
    }
  }
  return out;
}

std::vector<Idempotent<Rationals>> idempotents(const Ring<Rationals>& r, std::uint64_t) {
  throw AlgebraError(ErrorKind::UnsupportedDomain,
                     "idempotent enumeration over Q is not supported for '" + r.name() +
                         "'; supply candidate idempotents");
}

template <ScalarField F>
std::vector<Idempotent<F>> idempotents(const Ring<F>& r, const std::vector<Vec<F>>& candidates) {
  std::vector<Idempotent<F>> out{{r.zero_vec(), IdempotentKind::Zero},
                                 {r.unit(), IdempotentKind::Trivial}};
  for (const auto& c : candidates) {
    if (c.size() != r.dim()) {
      throw AlgebraError(ErrorKind::DimensionMismatch, "candidate has wrong coordinate count");
    }
    if (!is_idempotent(r, Span<F>(c))) continue;
    bool seen = std::any_of(out.begin(), out.end(), [&](const auto& x) { return x.coords == c; });
    if (!seen) out.push_back({c, classify(r, c)});
  }
  return out;
}

// ---- Peirce frames ---------------------------------------------------------

template <ScalarField F>
PeirceFrame<F> PeirceFrame<F>::build(const Ring<F>& r, Vec<F> e1) {
  const auto& f = r.field();
  if (e1.size() != r.dim()) {
    throw AlgebraError(ErrorKind::DimensionMismatch, "idempotent has wrong coordinate count");
  }
  if (!is_idempotent(r, Span<F>(e1))) {
    throw AlgebraError(ErrorKind::NotIdempotent, "e1 * e1 != e1",
                       Json{{"e1", coords_json(f, e1)}});
  }
  if (is_zero_vec(f, Span<F>(e1)) || e1 == r.unit()) {
    throw AlgebraError(ErrorKind::TrivialIdempotent, "e1 must differ from 0 and from the unit",
                       Json{{"e1", coords_json(f, e1)}});
  }
  Vec<F> e2 = vec_sub(f, Span<F>(r.unit()), Span<F>(e1));
  std::array<Matrix<F>, 4> proj;
  std::array<Subspace<F>, 4> comps{Subspace<F>(f, r.dim()), Subspace<F>(f, r.dim()),
                                   Subspace<F>(f, r.dim()), Subspace<F>(f, r.dim())};
  for (int i = 1; i <= 2; ++i) {
    for (int j = 1; j <= 2; ++j) {
      const auto& ei = i == 1 ? e1 : e2;
      const auto& ej = j == 1 ? e1 : e2;
      proj[slot(i, j)] = mat_mul(f, r.left_mul_matrix(ei), r.right_mul_matrix(ej));
      comps[slot(i, j)] = image(f, proj[slot(i, j)]);
    }
  }
  std::size_t total = 0;
  auto sum = Subspace<F>(f, r.dim());
  for (const auto& c : comps) {
    total += c.dim();
    sum = subspace_sum(sum, c);
  }
  if (total != r.dim() || sum.dim() != r.dim()) {
    throw AlgebraError(ErrorKind::NotPeirceDecomposable,
                       "the four Peirce components do not form a direct sum",
                       Json{{"component_dims",
                             {comps[0].dim(), comps[1].dim(), comps[2].dim(), comps[3].dim()}}});
  }
  return PeirceFrame(r, std::move(e1), std::move(e2), std::move(proj), std::move(comps));
}

template <ScalarField F>
std::array<Element<F>, 4> peirce_project(const PeirceFrame<F>& frame, const Element<F>& a) {
  frame.ring().check(a);
  auto parts = frame.project(Span<F>(a.coords));
  const auto id = frame.ring().id();
  return {Element<F>{id, parts[0]}, Element<F>{id, parts[1]}, Element<F>{id, parts[2]},
          Element<F>{id, parts[3]}};
}

template <ScalarField F>
std::vector<CheckReport> verify_peirce_relations(const PeirceFrame<F>& frame,
                                                 std::uint64_t budget) {
  const auto& r = frame.ring();
  const auto& f = r.field();
  const std::size_t n = r.dim();
  std::vector<CheckReport> out;
  const std::array<std::pair<int, int>, 4> pairs{{{1, 1}, {1, 2}, {2, 1}, {2, 2}}};

  {
    CheckReport rep{"projectors"};
    auto id = Matrix<F>::identity(f, n);
    Matrix<F> total(f, n, n);
    for (auto [i, j] : pairs) {
      const auto& p = frame.projector(i, j);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) total(a, b) = f.add(total(a, b), p(a, b));
      for (auto [k, l] : pairs) {
        auto prod = mat_mul(f, p, frame.projector(k, l));
        bool same = i == k && j == l;
        bool ok = same ? prod == p : prod == Matrix<F>(f, n, n);
        if (!ok && rep.pass) {
          rep.pass = false;
          rep.witness = Json{{"projectors", {cell_name(i, j), cell_name(k, l)}},
                             {"expected", same ? "idempotent" : "orthogonal"}};
        }
      }
    }
    if (rep.pass && !(total == id)) {
      rep.pass = false;
      rep.witness = Json{{"expected", "projectors sum to the identity"}};
    }
    rep.quantifier_space = Json{{"method", "matrix_identities"}, {"projectors", 4}};
    out.push_back(std::move(rep));
  }

  {
    CheckReport rep{"compatibility"};
    for (std::size_t k = 0; k < n && rep.pass; ++k) {
      auto a = r.basis_vec(k);
      for (int i = 1; i <= 2 && rep.pass; ++i) {
        for (int j = 1; j <= 2 && rep.pass; ++j) {
          auto lhs = r.mul(r.mul(frame.e(i), a), frame.e(j));
          auto rhs = r.mul(frame.e(i), r.mul(a, frame.e(j)));
          if (lhs != rhs) {
            rep.pass = false;
            rep.witness = Json{{"a", coords_json(f, a)}, {"i", i}, {"j", j}};
          }
        }
      }
    }
    rep.quantifier_space = Json{{"method", "basis"}, {"elements", n}};
    out.push_back(std::move(rep));
  }

  // Checks `pred(x*y)` on all basis pairs of two components.
  auto basis_pairs = [&](CheckReport& rep, int i, int j, int k, int l, auto&& pred,
                         std::size_t& counted) {
    for (const auto& x : frame.component(i, j).basis()) {
      for (const auto& y : frame.component(k, l).basis()) {
        ++counted;
        auto xy = r.mul(x, y);
        if (!pred(x, y, xy) && rep.pass) {
          rep.pass = false;
          rep.witness = Json{{"cells", {cell_name(i, j), cell_name(k, l)}},
                             {"x", coords_json(f, x)},
                             {"y", coords_json(f, y)},
                             {"product", coords_json(f, xy)}};
        }
      }
    }
  };

  {
    CheckReport rep{"Rij_Rjl_in_Ril"};
    std::size_t counted = 0;
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 2; ++j)
        for (int l = 1; l <= 2; ++l)
          basis_pairs(rep, i, j, j, l,
                      [&](const Vec<F>&, const Vec<F>&, const Vec<F>& p) {
                        return frame.component(i, l).contains(Span<F>(p));
                      },
                      counted);
    rep.quantifier_space = Json{{"method", "basis_pairs"}, {"pairs", counted}};
    out.push_back(std::move(rep));
  }

  {
    CheckReport rep{"Rij_Rij_in_Rji"};
    std::size_t counted = 0;
    std::size_t nonzero_offdiag = 0;
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 2; ++j)
        basis_pairs(rep, i, j, i, j,
                    [&](const Vec<F>&, const Vec<F>&, const Vec<F>& p) {
                      if (i != j && !is_zero_vec(f, Span<F>(p))) ++nonzero_offdiag;
                      return frame.component(j, i).contains(Span<F>(p));
                    },
                    counted);
    rep.quantifier_space = Json{{"method", "basis_pairs"}, {"pairs", counted}};
    rep.details = Json{{"nonzero_offdiagonal_products", nonzero_offdiag}};
    out.push_back(std::move(rep));
  }

  {
    CheckReport rep{"Rij_Rkl_zero"};
    std::size_t counted = 0;
    for (auto [i, j] : pairs)
      for (auto [k, l] : pairs) {
        if (j == k || (i == k && j == l)) continue;
        basis_pairs(rep, i, j, k, l,
                    [&](const Vec<F>&, const Vec<F>&, const Vec<F>& p) {
                      return is_zero_vec(f, Span<F>(p));
                    },
                    counted);
      }
    rep.quantifier_space = Json{{"method", "basis_pairs"}, {"pairs", counted}};
    out.push_back(std::move(rep));
  }

  CheckReport anti{"offdiag_anticommute"};
  {
    std::size_t counted = 0;
    for (auto [i, j] : {std::pair{1, 2}, std::pair{2, 1}})
      basis_pairs(anti, i, j, i, j,
                  [&](const Vec<F>& x, const Vec<F>& y, const Vec<F>& xy) {
                    auto yx = r.mul(y, x);
                    return is_zero_vec(f, Span<F>(vec_add(f, Span<F>(xy), Span<F>(yx))));
                  },
                  counted);
    anti.quantifier_space = Json{{"method", "basis_pairs"}, {"pairs", counted}};
  }

  {
    CheckReport rep{"offdiag_square_zero"};
    bool enumerated = false;
    std::uint64_t elements = 0;
    if constexpr (kFinite<F>) {
      auto s12 = space_size(f, frame.component(1, 2).dim());
      auto s21 = space_size(f, frame.component(2, 1).dim());
      if (s12 && s21 && *s12 + *s21 <= budget) {
        enumerated = true;
        for (auto [i, j] : {std::pair{1, 2}, std::pair{2, 1}}) {
          for (const auto& x : enumerate_subspace(frame.component(i, j), budget)) {
            ++elements;
            auto sq = r.mul(x, x);
            if (!is_zero_vec(f, Span<F>(sq)) && rep.pass) {
              rep.pass = false;
              rep.witness = Json{{"cell", cell_name(i, j)},
                                 {"x", coords_json(f, x)},
                                 {"square", coords_json(f, sq)}};
            }
          }
        }
      }
    }
    if (!enumerated) {
      // x^2 = sum c_k^2 b_k^2 + sum_{k<l} c_k c_l (b_k b_l + b_l b_k)
      for (auto [i, j] : {std::pair{1, 2}, std::pair{2, 1}}) {
        for (const auto& x : frame.component(i, j).basis()) {
          ++elements;
          auto sq = r.mul(x, x);
          if (!is_zero_vec(f, Span<F>(sq)) && rep.pass) {
            rep.pass = false;
            rep.witness = Json{{"cell", cell_name(i, j)},
                               {"x", coords_json(f, x)},
                               {"square", coords_json(f, sq)}};
          }
        }
      }
      if (rep.pass && !anti.pass) {
        rep.pass = false;
        rep.witness = anti.witness;
      }
    }
    rep.quantifier_space =
        Json{{"method", enumerated ? "enumerated" : "basis_squares_plus_anticommutation"},
             {"elements", elements}};
    out.push_back(std::move(rep));
  }
  out.push_back(std::move(anti));
  return out;
}

// ---- annihilators and hypotheses -------------------------------------------

template <ScalarField F>
Subspace<F> annihilator_in(const Ring<F>& r, const Subspace<F>& u, const Subspace<F>& v,
                           bool x_on_left) {
  if (v.is_zero()) return u;
  return kernel_in<F>(r.field(), u,
                      [&](Span<F> x) { return concat_products(r, x, v, x_on_left); });
}

template <ScalarField F>
Vec<F> first_nonzero(const Subspace<F>& s, std::uint64_t budget) {
  if (s.is_zero()) throw std::logic_error("first_nonzero of the zero subspace");
  if constexpr (kFinite<F>) {
    auto size = space_size(s.field(), s.dim());
    if (size && *size <= budget) return enumerate_subspace(s, budget)[1];
  }
  return s.basis().front();
}

namespace {

// Canonical-first element of s outside t, or nullopt when s ⊆ t.
template <ScalarField F>
std::optional<Vec<F>> first_outside(const Subspace<F>& s, const Subspace<F>& t,
                                    std::uint64_t budget) {
  if (t.contains(s)) return std::nullopt;
  if constexpr (kFinite<F>) {
    auto size = space_size(s.field(), s.dim());
    if (size && *size <= budget) {
      for (const auto& x : enumerate_subspace(s, budget)) {
        if (!t.contains(Span<F>(x))) return x;
      }
    }
  }
  for (const auto& b : s.basis()) {
    if (!t.contains(Span<F>(b))) return b;
  }
  return std::nullopt;
}

template <ScalarField F>
CheckReport kernel_condition(const std::string& name, const Ring<F>& r,
                             const std::vector<std::pair<std::string, Subspace<F>>>& kernels,
                             const std::vector<std::size_t>& component_dims, std::uint64_t budget) {
  const auto& f = r.field();
  CheckReport rep{name};
  Json parts = Json::array();
  for (const auto& [label, k] : kernels) {
    parts.push_back(Json{{"statement", label}, {"kernel_dim", k.dim()}});
    if (!k.is_zero() && rep.pass) {
      rep.pass = false;
      rep.witness = Json{{"statement", label}, {"x", coords_json(f, first_nonzero(k, budget))}};
    }
  }
  Json elements = Json::array();
  for (auto d : component_dims) elements.push_back(element_count(f, d));
  rep.quantifier_space = Json{{"method", "kernel"}, {"component_elements", elements}};
  rep.details = Json{{"parts", parts}};
  return rep;
}

template <ScalarField F>
CheckReport condition_1(const PeirceFrame<F>& fr, std::uint64_t budget) {
  const auto& r = fr.ring();
  return kernel_condition<F>(
      "condition_1", r,
      {{"x12 R21 = 0", annihilator_in(r, fr.component(1, 2), fr.component(2, 1), true)},
       {"x21 R12 = 0", annihilator_in(r, fr.component(2, 1), fr.component(1, 2), true)}},
      {fr.component(1, 2).dim(), fr.component(2, 1).dim()}, budget);
}

template <ScalarField F>
CheckReport condition_2(const PeirceFrame<F>& fr, std::uint64_t budget) {
  const auto& r = fr.ring();
  return kernel_condition<F>(
      "condition_2", r,
      {{"x11 R12 = 0", annihilator_in(r, fr.component(1, 1), fr.component(1, 2), true)},
       {"R21 x11 = 0", annihilator_in(r, fr.component(1, 1), fr.component(2, 1), false)}},
      {fr.component(1, 1).dim()}, budget);
}

template <ScalarField F>
CheckReport condition_3(const PeirceFrame<F>& fr, std::uint64_t budget) {
  const auto& r = fr.ring();
  return kernel_condition<F>(
      "condition_3", r,
      {{"R12 x22 = 0", annihilator_in(r, fr.component(2, 2), fr.component(1, 2), false)},
       {"x22 R21 = 0", annihilator_in(r, fr.component(2, 2), fr.component(2, 1), true)}},
      {fr.component(2, 2).dim()}, budget);
}

template <ScalarField F>
CheckReport condition_4(const Ring<F>& r, std::uint64_t budget) {
  const auto& f = r.field();
  const auto z = center(r);
  CheckReport rep{"condition_4"};
  auto test = [&](const Vec<F>& c) {
    auto rk = rank(f, r.left_mul_matrix(c));
    if (rk != r.dim()) {
      rep.pass = false;
      rep.witness = Json{{"z", coords_json(f, c)}, {"rank_of_zR", rk}, {"dim", r.dim()}};
      return false;
    }
    return true;
  };
  if constexpr (kFinite<F>) {
    auto size = space_size(f, z.dim());
    if (!size) require_budget(~std::uint64_t{0}, budget, "centre enumeration");
    require_budget(*size, budget, "condition 4 scan over the centre");
    std::uint64_t checked = 0;
    for (const auto& c : enumerate_subspace(z, budget)) {
      if (is_zero_vec(f, Span<F>(c))) continue;
      ++checked;
      if (!test(c)) break;
    }
    rep.quantifier_space = Json{{"method", "enumerated"},
                                {"centre_dim", z.dim()},
                                {"nonzero_central_elements", *size - 1},
                                {"checked", checked}};
  } else {
    if (z.dim() != 1) {
      throw AlgebraError(ErrorKind::UnsupportedDomain,
                         "condition 4 over Q is decided only for a one-dimensional centre");
    }
    test(z.basis().front());
    rep.quantifier_space =
        Json{{"method", "scalar_multiples"}, {"centre_dim", 1}, {"checked", 1}};
  }
  return rep;
}

}  // namespace

template <ScalarField F>
std::vector<CheckReport> check_main_hypotheses(const PeirceFrame<F>& frame,
                                               std::uint64_t budget) {
  return {condition_1(frame, budget), condition_2(frame, budget), condition_3(frame, budget),
          condition_4(frame.ring(), budget)};
}

template <ScalarField F>
std::vector<CheckReport> check_corner_conditions(const PeirceFrame<F>& frame,
                                                 std::uint64_t budget) {
  return {condition_2(frame, budget), condition_3(frame, budget)};
}

template <ScalarField F>
std::vector<CheckReport> check_spade_club(const PeirceFrame<F>& frame, std::uint64_t budget) {
  const auto& r = frame.ring();
  const auto& f = r.field();
  const auto z = center(r);
  const auto diag = subspace_sum(frame.component(1, 1), frame.component(2, 2));
  std::vector<CheckReport> out;
  for (auto [i, j, name] : {std::tuple{1, 2, "diagonal_commuting_with_R12_is_central"},
                            std::tuple{2, 1, "diagonal_commuting_with_R21_is_central"}}) {
    const auto& cell = frame.component(i, j);
    auto commuting = kernel_in<F>(f, diag, [&](Span<F> d) {
      Vec<F> v;
      for (const auto& b : cell.basis()) {
        auto c = r.commutator(d, b);
        v.insert(v.end(), c.begin(), c.end());
      }
      return v;
    });
    CheckReport rep{name};
    if (auto w = first_outside(commuting, z, budget)) {
      rep.pass = false;
      rep.witness = Json{{"d", coords_json(f, *w)}};
    }
    rep.quantifier_space = Json{{"method", "kernel"},
                                {"diagonal_elements", element_count(f, diag.dim())},
                                {"commuting_dim", commuting.dim()}};
    out.push_back(std::move(rep));
  }
  const bool c123 = condition_1(frame, budget).pass && condition_2(frame, budget).pass &&
                    condition_3(frame, budget).pass;
  CheckReport impl{"conditions_1_to_3_imply_diagonal_centrality"};
  impl.pass = !c123 || (out[0].pass && out[1].pass);
  impl.details = Json{{"conditions_1_to_3", c123},
                      {"R12_side", out[0].pass},
                      {"R21_side", out[1].pass}};
  impl.quantifier_space = Json{{"method", "implication"}};
  out.push_back(std::move(impl));
  return out;
}

template <ScalarField F>
std::vector<CheckReport> check_z_of_peirce_cell(const PeirceFrame<F>& frame) {
  const auto& r = frame.ring();
  const auto& f = r.field();
  const auto z = center(r);
  std::vector<CheckReport> out;
  for (auto [i, j] : {std::pair{1, 2}, std::pair{2, 1}}) {
    const auto& cell = frame.component(i, j);
    auto cell_centre = kernel_in<F>(f, cell, [&](Span<F> a) {
      Vec<F> v;
      for (const auto& b : cell.basis()) {
        auto c = r.commutator(a, b);
        v.insert(v.end(), c.begin(), c.end());
      }
      return v;
    });
    CheckReport rep{"cell_centre_" + cell_name(i, j)};
    auto target = subspace_sum(cell, z);
    if (!target.contains(cell_centre)) {
      rep.pass = false;
      for (const auto& b : cell_centre.basis()) {
        if (!target.contains(Span<F>(b))) {
          rep.witness = Json{{"a", coords_json(f, b)}};
          break;
        }
      }
    }
    rep.quantifier_space = Json{{"method", "kernel"}, {"cell_elements", element_count(f, cell.dim())}};
    rep.details = Json{{"cell_dim", cell.dim()},
                       {"cell_centre_dim", cell_centre.dim()},
                       {"cell_centre_meet_centre_dim", subspace_intersection(cell_centre, z).dim()}};
    out.push_back(std::move(rep));
  }
  return out;
}

// ---- ideals and primeness --------------------------------------------------

template <ScalarField F>
Subspace<F> ideal_generated(const Ring<F>& r, std::span<const typename F::Element> a) {
  const auto& f = r.field();
  EchelonBuilder<F> ideal(f, r.dim());
  std::vector<Vec<F>> queue;
  if (ideal.insert(a)) queue.emplace_back(a.begin(), a.end());
  while (!queue.empty() && ideal.rank() < r.dim()) {
    auto v = std::move(queue.back());
    queue.pop_back();
    for (std::size_t s = 0; s < r.dim() && ideal.rank() < r.dim(); ++s) {
      auto b = r.basis_vec(s);
      for (auto p : {r.mul(b, v), r.mul(v, b)}) {
        if (ideal.insert(p)) queue.push_back(std::move(p));
      }
    }
  }
  return ideal.to_subspace();
}

template <ScalarField F>
Subspace<F> central_multiples(const Ring<F>& r, const Subspace<F>& centre,
                              std::span<const typename F::Element> fv) {
  std::vector<Vec<F>> vs;
  for (const auto& z : centre.basis()) vs.push_back(r.mul(z, fv));
  return Subspace<F>::span(r.field(), r.dim(), vs);
}

Json PrimenessReport::to_json() const {
  Json j;
  j["prime"] = prime;
  j["ideal_prime"] = ideal_prime;
  j["criterion_equiv"] = criterion_equiv;
  j["witness"] = witness;
  j["ideal_witness"] = ideal_witness;
  j["quantifier_space"] = quantifier_space;
  return j;
}

PrimenessReport check_primeness(const Ring<PrimeField>& r, std::uint64_t budget) {
  using F = PrimeField;
  const auto& f = r.field();
  const std::size_t n = r.dim();
  auto total = space_size(f, n);
  if (!total) require_budget(~std::uint64_t{0}, budget, "primeness scan");
  const std::uint64_t reps = (*total - 1) / static_cast<std::uint64_t>(f.modulus() - 1);
  require_budget(reps, budget, "primeness scan over projective points of " + r.name());

  PrimenessReport report;
  // Left multiplication matrices of the basis, reused for L_{a r}.
  std::vector<Matrix<F>> left;
  for (std::size_t s = 0; s < n; ++s) left.push_back(r.left_mul_matrix(r.basis_vec(s)));
  auto left_of = [&](const Vec<F>& x) {
    Matrix<F> m(f, n, n);
    for (std::size_t s = 0; s < n; ++s) {
      if (x[s] == 0) continue;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) m(a, b) = f.add(m(a, b), f.mul(x[s], left[s](a, b)));
    }
    return m;
  };

  std::map<std::vector<Vec<F>>, Vec<F>> principal;  // ideal basis -> first generator
  std::vector<const std::vector<Vec<F>>*> discovery;
  ElementSpace space(f, n);
  std::uint64_t scanned = 0;
  std::vector<Vec<F>> multipliers{r.unit()};
  for (std::size_t s = 0; s < n; ++s) multipliers.push_back(r.basis_vec(s));

  const auto p = static_cast<std::uint64_t>(f.modulus());
  std::uint64_t block = 1;  // p^h
  for (std::size_t h = 0; h < n; ++h, block *= p) {
    for (std::uint64_t low = 0; low < block; ++low) {
      auto a = space.at(low);
      a[h] = 1;
      ++scanned;
      if (report.prime) {
        // b -> ((a r) b) stacked over r; b must lie in the kernel
        EchelonBuilder<F> rows(f, n);
        std::vector<Vec<F>> all_rows;
        for (const auto& m : multipliers) {
          auto lm = left_of(r.mul(a, m));
          for (std::size_t row = 0; row < n; ++row) {
            Vec<F> v(lm.row(row).begin(), lm.row(row).end());
            rows.insert(v);
            all_rows.push_back(std::move(v));
          }
          if (rows.rank() == n) break;
        }
        if (rows.rank() < n) {
          auto kernel = Subspace<F>::span(f, n, nullspace(f, Matrix<F>::from_rows(f, n, all_rows)));
          report.prime = false;
          report.witness = Json{{"a", coords_json(f, a)},
                                {"b", coords_json(f, first_nonzero(kernel, budget))}};
        }
      }
      auto ideal = ideal_generated(r, std::span<const F::Element>(a));
      auto [it, inserted] = principal.emplace(ideal.basis(), a);
      if (inserted) discovery.push_back(&it->first);
    }
  }

  // Pairs of principal ideals in discovery order; I = J covers nilpotent ideals.
  for (std::size_t x = 0; x < discovery.size() && report.ideal_prime; ++x) {
    for (std::size_t y = 0; y < discovery.size() && report.ideal_prime; ++y) {
      bool nonzero = false;
      for (const auto& u : *discovery[x]) {
        for (const auto& v : *discovery[y]) {
          if (!is_zero_vec(f, std::span<const F::Element>(r.mul(u, v)))) {
            nonzero = true;
            break;
          }
        }
        if (nonzero) break;
      }
      if (!nonzero) {
        report.ideal_prime = false;
        report.ideal_witness = Json{{"a", coords_json(f, principal.at(*discovery[x]))},
                                    {"b", coords_json(f, principal.at(*discovery[y]))},
                                    {"ideal_a_dim", discovery[x]->size()},
                                    {"ideal_b_dim", discovery[y]->size()}};
      }
    }
  }
  report.criterion_equiv = report.prime == report.ideal_prime;
  report.quantifier_space = Json{{"projective_points", scanned},
                                 {"principal_ideals", discovery.size()},
                                 {"inner_multipliers", "unit and basis"}};
  return report;
}

// ---- explicit instantiations -----------------------------------------------

#define ALTRING_INSTANTIATE(F)                                                                   \
  template Subspace<F> center(const Ring<F>&);                                                   \
  template Subspace<F> nucleus(const Ring<F>&);                                                  \
  template Subspace<F> commutator_span(const Ring<F>&);                                          \
  template std::vector<Idempotent<F>> idempotents(const Ring<F>&, const std::vector<Vec<F>>&);   \
  template class PeirceFrame<F>;                                                                 \
  template std::array<Element<F>, 4> peirce_project(const PeirceFrame<F>&, const Element<F>&);   \
  template std::vector<CheckReport> verify_peirce_relations(const PeirceFrame<F>&, std::uint64_t); \
  template std::vector<CheckReport> check_main_hypotheses(const PeirceFrame<F>&, std::uint64_t); \
  template std::vector<CheckReport> check_corner_conditions(const PeirceFrame<F>&, std::uint64_t); \
  template std::vector<CheckReport> check_spade_club(const PeirceFrame<F>&, std::uint64_t);      \
  template std::vector<CheckReport> check_z_of_peirce_cell(const PeirceFrame<F>&);               \
  template Subspace<F> ideal_generated(const Ring<F>&, std::span<const F::Element>);             \
  template Subspace<F> annihilator_in(const Ring<F>&, const Subspace<F>&, const Subspace<F>&,    \
                                      bool);                                                     \
  template Vec<F> first_nonzero(const Subspace<F>&, std::uint64_t);                              \
  template Subspace<F> central_multiples(const Ring<F>&, const Subspace<F>&,                     \
                                         std::span<const F::Element>);

ALTRING_INSTANTIATE(PrimeField)
ALTRING_INSTANTIATE(Rationals)

#undef ALTRING_INSTANTIATE

}  // namespace altring
