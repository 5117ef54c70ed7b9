#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <random>
#include <vector>

#include "bisetkit/biset.hpp"
#include "bisetkit/cyclotomic.hpp"
#include "bisetkit/homs.hpp"
#include "bisetkit/linalg.hpp"
#include "bisetkit/subgroups.hpp"

namespace bisetkit {

inline constexpr int kCharacterTableMaxOrder = 64;

/// A class function, one value per conjugacy class of elements (element_classes order).
struct CharacterVector {
  FiniteGroup group;
  std::vector<Cyclotomic> values;

  static CharacterVector zero(const FiniteGroup& g) {
    return {g, std::vector<Cyclotomic>(static_cast<std::size_t>(element_classes(g).count()), Cyclotomic(0))};
  }

  const Cyclotomic& at(Element e) const { return values[element_classes(group).class_of[e]]; }
  Cyclotomic degree() const { return values.front(); }

  bool is_rational() const {
    for (const auto& v : values)
      if (!v.is_rational()) return false;
    return true;
  }
  std::vector<Rational> rational_values() const {
    std::vector<Rational> out;
    for (const auto& v : values) {
      require(v.is_rational(), ErrorCode::NonRationalValues, "character has non-rational values");
      out.push_back(v.rational_value());
    }
    return out;
  }

  CharacterVector& operator+=(const CharacterVector& o) {
    require(o.group == group, ErrorCode::InterfaceMismatch, "characters of different groups");
    for (std::size_t i = 0; i < values.size(); ++i) values[i] += o.values[i];
    return *this;
  }
  CharacterVector scaled(const Cyclotomic& c) const {
    CharacterVector r = *this;
    for (auto& v : r.values) v = v * c;
    return r;
  }

  friend bool operator==(const CharacterVector& a, const CharacterVector& b) {
    return a.group == b.group && a.values == b.values;
  }
};

/// <a, b> = (1/|G|) sum_g a(g) conj(b(g)).
inline Cyclotomic inner_product(const CharacterVector& a, const CharacterVector& b) {
  require(a.group == b.group, ErrorCode::InterfaceMismatch, "characters of different groups");
  const auto& ec = element_classes(a.group);
  Cyclotomic s(0);
  for (int c = 0; c < ec.count(); ++c) s += (a.values[c] * b.values[c].conj()).scaled(Rational(ec.size(c)));
  return s.scaled(make_rational(1, a.group.order()));
}

/// Character of the permutation module Q[G/C]: g -> #{xC : g x C = x C}.
inline CharacterVector perm_character(const FiniteGroup& g, const ElementSet& c) {
  require(is_subgroup(g, c), ErrorCode::NotSubgroup, "perm_character needs a subgroup");
  const auto& ec = element_classes(g);
  CharacterVector chi = CharacterVector::zero(g);
  for (int k = 0; k < ec.count(); ++k) {
    // |{x : x^{-1} g x in C}| / |C| = |C_G(g)| * |K cap C| / |C|
    int meet = 0;
    for (Element y : ec.classes[k]) meet += c.contains(y);
    long value = static_cast<long>(g.order() / ec.size(k)) * meet;
    chi.values[k] = Cyclotomic(make_rational(value, c.size()));
  }
  return chi;
}

/// Linearization of an element of B(H, G): its character on H x G.
inline CharacterVector biset_character(const BurnsideElement& x) {
  auto p = x.product();
  auto chi = CharacterVector::zero(p.group);
  for (const auto& [c, q] : x.terms()) chi += perm_character(p.group, x.lattice_ref().class_rep(c)).scaled(Cyclotomic(q));
  return chi;
}

/// tau(h, k) = (1/|G|) sum_g tauM(h, g) tauN(g, k) for tauM on H x G and tauN on G x K.
inline CharacterVector compose_characters(const FiniteGroup& h, const FiniteGroup& g, const FiniteGroup& k,
                                          const CharacterVector& tm, const CharacterVector& tn) {
  auto hg = direct_product(h, g), gk = direct_product(g, k), hk = direct_product(h, k);
  require(tm.group == hg.group, ErrorCode::MiddleMismatch, "first character is not on H x G");
  require(tn.group == gk.group, ErrorCode::MiddleMismatch, "second character is not on G x K");
  const auto& ec = element_classes(hk.group);
  const auto& ecm = element_classes(hg.group);
  const auto& ecn = element_classes(gk.group);
  auto out = CharacterVector::zero(hk.group);
  const bool rational = tm.is_rational() && tn.is_rational();
  for (int c = 0; c < ec.count(); ++c) {
    Element rep = ec.rep(c);
    Element a = hk.first(rep), b = hk.second(rep);
    if (rational) {
      Rational s = 0;
      for (int x = 0; x < g.order(); ++x) {
        const auto& u = tm.values[ecm.class_of[hg.pair(a, static_cast<Element>(x))]];
        const auto& v = tn.values[ecn.class_of[gk.pair(static_cast<Element>(x), b)]];
        if (u.is_zero() || v.is_zero()) continue;
        s += u.coords()[0] * v.coords()[0];
      }
      out.values[c] = Cyclotomic(Rational(s / g.order()));
    } else {
      Cyclotomic s(0);
      for (int x = 0; x < g.order(); ++x) {
        const auto& u = tm.values[ecm.class_of[hg.pair(a, static_cast<Element>(x))]];
        const auto& v = tn.values[ecn.class_of[gk.pair(static_cast<Element>(x), b)]];
        if (u.is_zero() || v.is_zero()) continue;
        s += u * v;
      }
      out.values[c] = s.scaled(make_rational(1, g.order()));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Rational representations: the basis of permutation characters of cyclic subgroups

/// Coefficients over classes of cyclic subgroups (lattice class ids of G).
struct RQElement {
  FiniteGroup group;
  std::map<int, Rational> coeffs;

  Rational coeff(int class_id) const {
    auto it = coeffs.find(class_id);
    return it == coeffs.end() ? Rational(0) : it->second;
  }
  void add(int class_id, const Rational& q) {
    if (q == 0) return;
    auto& v = coeffs[class_id];
    v += q;
    if (v == 0) coeffs.erase(class_id);
  }
  friend bool operator==(const RQElement& a, const RQElement& b) { return a.group == b.group && a.coeffs == b.coeffs; }
};

/// Conjugacy classes of cyclic subgroups, deterministic order.
inline std::vector<SubgroupClass> rq_cyclic_basis(const FiniteGroup& g) {
  std::vector<SubgroupClass> out;
  for (int c : cyclic_class_ids(g)) out.push_back(lattice(g).classes[c]);
  return out;
}

inline CharacterVector expand_rq(const RQElement& x) {
  auto chi = CharacterVector::zero(x.group);
  const auto& lat = lattice(x.group);
  for (const auto& [c, q] : x.coeffs) chi += perm_character(x.group, lat.class_rep(c)).scaled(Cyclotomic(q));
  return chi;
}

/// Artin coefficients on an abelian group:
/// q_G = (1/[Gamma:G]) sum over cyclic G* >= G of mu([G*:G]) tau(z*), z* a generator of G*.
inline RQElement artin_coefficients(const CharacterVector& tau) {
  const auto& g = tau.group;
  require(g.is_abelian(), ErrorCode::NotAbelian, "Artin coefficients are implemented for abelian groups only");
  auto values = tau.rational_values();
  const auto& lat = lattice(g);
  const auto& ec = element_classes(g);
  auto ids = cyclic_class_ids(g);
  std::vector<Element> gen(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const auto& s = lat.class_rep(ids[i]);
    s.for_each([&](Element e) {
      if (g.element_order(e) == s.size() && gen[i] == 0) gen[i] = e;
    });
  }
  RQElement out{g, {}};
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const auto& gi = lat.class_rep(ids[i]);
    Rational q = 0;
    for (std::size_t j = 0; j < ids.size(); ++j) {
      const auto& gj = lat.class_rep(ids[j]);
      if (!gi.is_subset_of(gj)) continue;
      q += Rational(mobius_int(gj.size() / gi.size())) * values[ec.class_of[gen[j]]];
    }
    out.add(ids[i], q * gi.size() / g.order());
  }
  return out;
}

/// Coordinates of a rational class function in the cyclic permutation-character
/// basis, by exact linear solve (any group).
inline RQElement rq_coordinates(const CharacterVector& tau) {
  const auto& g = tau.group;
  auto values = tau.rational_values();
  auto ids = cyclic_class_ids(g);
  const auto& lat = lattice(g);
  const int nc = element_classes(g).count();
  Matrix<Rational> a(static_cast<std::size_t>(nc), std::vector<Rational>(ids.size()));
  for (std::size_t j = 0; j < ids.size(); ++j) {
    auto chi = perm_character(g, lat.class_rep(ids[j]));
    for (int i = 0; i < nc; ++i) a[i][j] = chi.values[i].rational_value();
  }
  auto x = solve_unique(a, values, ids.size());
  require(x.has_value(), ErrorCode::InvalidInput, "class function is not a rational virtual character");
  RQElement out{g, {}};
  for (std::size_t j = 0; j < ids.size(); ++j) out.add(ids[j], (*x)[j]);
  return out;
}

/// Basis of the kernel of linearization B(G) -> R_Q(G), as vectors over subgroup classes.
inline Matrix<Rational> lin_kernel(const FiniteGroup& g) {
  const auto& lat = lattice(g);
  const int nc = element_classes(g).count();
  Matrix<Rational> rows(static_cast<std::size_t>(nc), std::vector<Rational>(static_cast<std::size_t>(lat.class_count())));
  for (int s = 0; s < lat.class_count(); ++s) {
    auto chi = perm_character(g, lat.class_rep(s));
    for (int i = 0; i < nc; ++i) rows[i][s] = chi.values[i].rational_value();
  }
  return nullspace(rows, static_cast<std::size_t>(lat.class_count()));
}

// ---------------------------------------------------------------------------
// Character tables

namespace detail {

inline std::vector<CharacterVector> abelian_character_table(const FiniteGroup& g) {
  const int e = g.exponent();
  auto target = cyclic_group(e);
  std::vector<CharacterVector> table;
  for (const auto& hom : homomorphisms(g, target)) {
    CharacterVector chi = CharacterVector::zero(g);
    for (int x = 0; x < g.order(); ++x) chi.values[x] = Cyclotomic::zeta(e, hom(static_cast<Element>(x)));
    table.push_back(std::move(chi));
  }
  require(static_cast<int>(table.size()) == g.order(), ErrorCode::Internal, "dual group has the wrong size");
  return table;
}

/// Exact value of a character at g from numeric values at the Galois conjugates g^k:
/// chi(g) = sum_i a_i zeta_n^i with integer a_i, i < phi(n).
inline Cyclotomic recognize_value(int n, const std::vector<std::complex<double>>& conj_values,
                                  const std::vector<int>& units) {
  const auto& f = cyclotomic_field(n);
  const int d = f.degree;
  const double two_pi = 2.0 * std::acos(-1.0);
  Eigen::MatrixXcd v(d, d);
  Eigen::VectorXcd rhs(d);
  for (int r = 0; r < d; ++r) {
    for (int i = 0; i < d; ++i) v(r, i) = std::polar(1.0, two_pi * static_cast<double>(i) * units[r] / n);
    rhs(r) = conj_values[r];
  }
  Eigen::VectorXcd sol = v.fullPivLu().solve(rhs);
  std::vector<Rational> coords;
  for (int i = 0; i < d; ++i) {
    double re = sol(i).real();
    double rounded = std::round(re);
    require(std::abs(re - rounded) < 1e-6 && std::abs(sol(i).imag()) < 1e-6, ErrorCode::Internal,
            "character value is not recognized as a cyclotomic integer");
    coords.emplace_back(static_cast<long>(rounded));
  }
  return Cyclotomic::from_coords(n, std::move(coords)).simplified();
}

inline std::vector<CharacterVector> class_algebra_table(const FiniteGroup& g) {
  const auto& ec = element_classes(g);
  const int r = ec.count();
  // c[j][k][l] = #{x in K_j : x^{-1} g_l in K_k}
  std::vector<Eigen::MatrixXd> m(r, Eigen::MatrixXd::Zero(r, r));
  std::vector<std::vector<std::vector<long>>> c(r, std::vector<std::vector<long>>(r, std::vector<long>(r, 0)));
  for (int j = 0; j < r; ++j)
    for (int l = 0; l < r; ++l)
      for (Element x : ec.classes[j]) {
        int k = ec.class_of[g.mul(g.inv(x), ec.rep(l))];
        ++c[j][k][l];
      }
  for (int j = 0; j < r; ++j)
    for (int k = 0; k < r; ++k)
      for (int l = 0; l < r; ++l) m[j](k, l) = static_cast<double>(c[j][k][l]);

  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int attempt = 0; attempt < 20; ++attempt) {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(r, r);
    for (int j = 0; j < r; ++j) a += dist(rng) * m[j];
    Eigen::EigenSolver<Eigen::MatrixXd> es(a);
    if (es.info() != Eigen::Success) continue;
    auto lambda = es.eigenvalues();
    bool separated = true;
    for (int i = 0; i < r && separated; ++i)
      for (int i2 = i + 1; i2 < r; ++i2)
        if (std::abs(lambda(i) - lambda(i2)) < 1e-6) {
          separated = false;
          break;
        }
    if (!separated) continue;
    Eigen::MatrixXcd vecs = es.eigenvectors();
    std::vector<std::vector<std::complex<double>>> numeric;
    bool ok = true;
    for (int col = 0; col < r && ok; ++col) {
      std::complex<double> w0 = vecs(0, col);  // class of the identity
      if (std::abs(w0) < 1e-9) {
        ok = false;
        break;
      }
      std::vector<std::complex<double>> w(r);
      double norm = 0;
      for (int j = 0; j < r; ++j) {
        w[j] = vecs(j, col) / w0;
        norm += std::norm(w[j]) / ec.size(j);
      }
      double d = std::sqrt(g.order() / norm);
      double dr = std::round(d);
      if (std::abs(d - dr) > 1e-6 || dr < 1) {
        ok = false;
        break;
      }
      std::vector<std::complex<double>> chi(r);
      for (int j = 0; j < r; ++j) chi[j] = dr * w[j] / static_cast<double>(ec.size(j));
      numeric.push_back(std::move(chi));
    }
    if (!ok) continue;

    std::vector<CharacterVector> table;
    for (const auto& chi : numeric) {
      CharacterVector v = CharacterVector::zero(g);
      for (int j = 0; j < r; ++j) {
        Element x = ec.rep(j);
        const int n = g.element_order(x);
        std::vector<int> units;
        std::vector<std::complex<double>> conj_values;
        for (int k = 1; k <= n; ++k)
          if (std::gcd(k, n) == 1) {
            units.push_back(k % n);
            conj_values.push_back(chi[ec.class_of[g.pow(x, k)]]);
          }
        v.values[j] = recognize_value(n, conj_values, units);
      }
      table.push_back(std::move(v));
    }
    return table;
  }
  fail(ErrorCode::Internal, "class algebra eigenvectors could not be separated for " + g.label());
}

inline void verify_character_table(const FiniteGroup& g, const std::vector<CharacterVector>& table) {
  const auto& ec = element_classes(g);
  require(static_cast<int>(table.size()) == ec.count(), ErrorCode::Internal, "character count differs from class count");
  Rational sum_sq = 0;
  for (std::size_t i = 0; i < table.size(); ++i) {
    require(table[i].values[0].is_rational() && is_integer(table[i].values[0].rational_value()) &&
                table[i].values[0].rational_value() > 0,
            ErrorCode::Internal, "degree is not a positive integer");
    Rational d = table[i].values[0].rational_value();
    sum_sq += d * d;
    for (std::size_t j = i; j < table.size(); ++j) {
      Cyclotomic ip = inner_product(table[i], table[j]);
      require(ip == Cyclotomic(i == j ? 1 : 0), ErrorCode::Internal, "first orthogonality fails for " + g.label());
    }
  }
  require(sum_sq == g.order(), ErrorCode::Internal, "degree equation fails for " + g.label());
}

}  // namespace detail

/// Irreducible complex characters, sorted by degree with the trivial character first.
inline const std::vector<CharacterVector>& character_table(const FiniteGroup& g) {
  require(g.order() <= kCharacterTableMaxOrder, ErrorCode::OrderBound,
          "character tables are computed up to order " + std::to_string(kCharacterTableMaxOrder));
  static detail::GroupMemo<std::vector<CharacterVector>> memo;
  return memo.get(g, [&] {
    auto table = g.is_abelian() ? detail::abelian_character_table(g) : detail::class_algebra_table(g);
    auto key = [](const CharacterVector& chi) {
      std::vector<double> k;
      k.push_back(chi.values[0].rational_value().get_d());
      for (const auto& v : chi.values) {
        auto z = v.to_complex();
        k.push_back(-std::round(z.real() * 1e6) / 1e6);
        k.push_back(std::round(z.imag() * 1e6) / 1e6);
      }
      return k;
    };
    std::stable_sort(table.begin(), table.end(),
                     [&](const CharacterVector& a, const CharacterVector& b) { return key(a) < key(b); });
    detail::verify_character_table(g, table);
    return table;
  });
}

/// chi (x) psi on G x K.
inline CharacterVector outer_tensor(const DirectProduct& p, const CharacterVector& chi, const CharacterVector& psi) {
  const auto& ec = element_classes(p.group);
  auto out = CharacterVector::zero(p.group);
  for (int c = 0; c < ec.count(); ++c) {
    Element x = ec.rep(c);
    out.values[c] = chi.at(p.first(x)) * psi.at(p.second(x));
  }
  return out;
}

}  // namespace bisetkit
