#pragma once

#include <algorithm>
#include <concepts>
#include <exception>
#include <numeric>
#include <string>
#include <thread>
#include <vector>

#include "bisetkit/biset.hpp"
#include "bisetkit/catalog.hpp"
#include "bisetkit/characters.hpp"
#include "bisetkit/dress.hpp"
#include "bisetkit/homs.hpp"
#include "bisetkit/linalg.hpp"

namespace bisetkit {

// ---------------------------------------------------------------------------
// Backends

/// A Green biset functor A given on basis coordinates. basis(X) and dim(X)
/// describe A(X); compose takes beta in A(H x G) and alpha in A(G x K) to
/// beta o alpha in A(H x K).
template <class B>
concept GreenBackend = requires(const B& b, const FiniteGroup& g, const std::vector<typename B::Scalar>& v) {
  typename B::Scalar;
  { b.name() } -> std::convertible_to<std::string>;
  { b.basis(g) } -> std::same_as<std::vector<std::string>>;
  { b.dim(g) } -> std::convertible_to<int>;
  { b.compose(g, g, g, v, v) } -> std::same_as<std::vector<typename B::Scalar>>;
  { b.identity(g) } -> std::same_as<std::vector<typename B::Scalar>>;
};

namespace detail {

inline std::string class_label(const SubgroupLattice& lat, int c) {
  return "L" + std::to_string(c) + "[" + std::to_string(lat.class_rep(c).size()) + "]";
}

}  // namespace detail

/// The Burnside functor: A(X) = QB(X), basis the subgroup classes of X.
struct RBBackend {
  using Scalar = Rational;
  std::string name() const { return "rb"; }
  std::vector<std::string> basis(const FiniteGroup& x) const {
    const auto& lat = lattice(x);
    std::vector<std::string> out;
    for (int c = 0; c < lat.class_count(); ++c) out.push_back(detail::class_label(lat, c));
    return out;
  }
  int dim(const FiniteGroup& x) const { return lattice(x).class_count(); }

  static BurnsideElement from_dense(const FiniteGroup& h, const FiniteGroup& g, const std::vector<Rational>& v) {
    BurnsideElement e(h, g);
    for (std::size_t i = 0; i < v.size(); ++i) e.add(static_cast<int>(i), v[i]);
    return e;
  }
  std::vector<Rational> compose(const FiniteGroup& h, const FiniteGroup& g, const FiniteGroup& k,
                                const std::vector<Rational>& beta, const std::vector<Rational>& alpha) const {
    return compose_bisets(from_dense(h, g, beta), from_dense(g, k, alpha)).dense();
  }
  std::vector<Rational> identity(const FiniteGroup& g) const { return identity_biset(g).dense(); }
};

namespace detail {

/// Maps a rational class function of X to coordinates over the cyclic
/// permutation characters, using an invertible square block of the value matrix.
struct RQSolver {
  std::vector<int> ids;          // cyclic class ids of X
  std::vector<int> rows;         // element classes used
  Matrix<Rational> inverse;      // ids.size() square
  std::vector<CharacterVector> basis;

  std::vector<Rational> coords(const CharacterVector& tau) const {
    std::vector<Rational> out(ids.size(), Rational(0));
    for (std::size_t i = 0; i < ids.size(); ++i)
      for (std::size_t j = 0; j < rows.size(); ++j) {
        const auto& v = tau.values[rows[j]];
        if (!v.is_zero()) out[i] += inverse[i][j] * v.rational_value();
      }
    return out;
  }
};

inline const RQSolver& rq_solver(const FiniteGroup& x) {
  static GroupMemo<RQSolver> memo;
  return memo.get(x, [&] {
    RQSolver s;
    s.ids = cyclic_class_ids(x);
    const auto& lat = lattice(x);
    for (int id : s.ids) s.basis.push_back(perm_character(x, lat.class_rep(id)));
    const std::size_t n = s.ids.size();
    const int nc = element_classes(x).count();
    RowEchelon<Rational> pick(n);
    for (int r = 0; r < nc && !pick.full(); ++r) {
      std::vector<Rational> row(n);
      for (std::size_t j = 0; j < n; ++j) row[j] = s.basis[j].values[r].rational_value();
      if (pick.insert(row)) s.rows.push_back(r);
    }
    require(pick.full(), ErrorCode::Internal, "cyclic permutation characters are dependent");
    // [A | I] -> [I | A^-1], A[j][i] = basis_i at row_j
    RowEchelon<Rational> gj(2 * n);
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Rational> row(2 * n, Rational(0));
      for (std::size_t i = 0; i < n; ++i) row[i] = s.basis[i].values[s.rows[j]].rational_value();
      row[n + j] = 1;
      gj.insert(row);
    }
    s.inverse.assign(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) s.inverse[i][j] = gj.rows()[i][n + j];
    return s;
  });
}

}  // namespace detail

/// kR_Q with the Artin basis (permutation characters of cyclic subgroup
/// classes) and composition of characters over the middle group.
struct RQBackend {
  using Scalar = Rational;
  std::string name() const { return "rq"; }
  std::vector<std::string> basis(const FiniteGroup& x) const {
    const auto& lat = lattice(x);
    std::vector<std::string> out;
    for (int id : detail::rq_solver(x).ids) out.push_back(detail::class_label(lat, id));
    return out;
  }
  int dim(const FiniteGroup& x) const { return static_cast<int>(detail::rq_solver(x).ids.size()); }

  static CharacterVector to_character(const FiniteGroup& x, const std::vector<Rational>& v) {
    const auto& s = detail::rq_solver(x);
    auto chi = CharacterVector::zero(x);
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) chi += s.basis[i].scaled(Cyclotomic(v[i]));
    return chi;
  }
  std::vector<Rational> compose(const FiniteGroup& h, const FiniteGroup& g, const FiniteGroup& k,
                                const std::vector<Rational>& beta, const std::vector<Rational>& alpha) const {
    auto hg = direct_product(h, g).group, gk = direct_product(g, k).group, hk = direct_product(h, k).group;
    auto tau = compose_characters(h, g, k, to_character(hg, beta), to_character(gk, alpha));
    return detail::rq_solver(hk).coords(tau);
  }
  std::vector<Rational> identity(const FiniteGroup& g) const {
    auto p = direct_product(g, g);
    return detail::rq_solver(p.group).coords(perm_character(p.group, diagonal(p)));
  }
};

/// CR_C with the basis of irreducible characters.
struct CRCBackend {
  using Scalar = Cyclotomic;
  std::string name() const { return "crc"; }
  std::vector<std::string> basis(const FiniteGroup& x) const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < character_table(x).size(); ++i) out.push_back("chi" + std::to_string(i));
    return out;
  }
  int dim(const FiniteGroup& x) const { return static_cast<int>(character_table(x).size()); }

  static CharacterVector to_character(const FiniteGroup& x, const std::vector<Cyclotomic>& v) {
    const auto& t = character_table(x);
    auto chi = CharacterVector::zero(x);
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!v[i].is_zero()) chi += t[i].scaled(v[i]);
    return chi;
  }
  static std::vector<Cyclotomic> coords(const CharacterVector& tau) {
    std::vector<Cyclotomic> out;
    for (const auto& chi : character_table(tau.group)) out.push_back(inner_product(tau, chi).simplified());
    return out;
  }
  std::vector<Cyclotomic> compose(const FiniteGroup& h, const FiniteGroup& g, const FiniteGroup& k,
                                  const std::vector<Cyclotomic>& beta, const std::vector<Cyclotomic>& alpha) const {
    auto hg = direct_product(h, g).group, gk = direct_product(g, k).group;
    return coords(compose_characters(h, g, k, to_character(hg, beta), to_character(gk, alpha)));
  }
  std::vector<Cyclotomic> identity(const FiniteGroup& g) const {
    auto p = direct_product(g, g);
    return coords(perm_character(p.group, diagonal(p)));
  }
};

/// RB_C: A(X) = QB(X x C), composed by the diagonal-action product.
struct RBCBackend {
  using Scalar = Rational;
  FiniteGroup c;

  std::string name() const { return "rbc"; }
  std::vector<std::string> basis(const FiniteGroup& x) const {
    const auto& lat = lattice(direct_product(x, c).group);
    std::vector<std::string> out;
    for (int i = 0; i < lat.class_count(); ++i) out.push_back(detail::class_label(lat, i));
    return out;
  }
  int dim(const FiniteGroup& x) const { return lattice(direct_product(x, c).group).class_count(); }

  DressElement from_dense(const FiniteGroup& h, const FiniteGroup& g, const std::vector<Rational>& v) const {
    DressElement e(triple_product(h, g, c));
    for (std::size_t i = 0; i < v.size(); ++i) e.add(static_cast<int>(i), v[i]);
    return e;
  }
  std::vector<Rational> compose(const FiniteGroup& h, const FiniteGroup& g, const FiniteGroup& k,
                                const std::vector<Rational>& beta, const std::vector<Rational>& alpha) const {
    return dress_compose(from_dense(h, g, beta), from_dense(g, k, alpha)).dense();
  }
  std::vector<Rational> identity(const FiniteGroup& g) const { return dress_identity(g, c).dense(); }
};

static_assert(GreenBackend<RBBackend>);
static_assert(GreenBackend<RQBackend>);
static_assert(GreenBackend<CRCBackend>);
static_assert(GreenBackend<RBCBackend>);

// ---------------------------------------------------------------------------
// The ideal I_A(H) and the quotient A^(H)

struct IdealReport {
  std::string backend;
  FiniteGroup group;
  int ambient_dim = 0;
  int ideal_dim = 0;
  int quotient_dim = 0;
  std::vector<std::string> quotient_basis;
  std::vector<int> quotient_indices;
  bool determined = true;
};

namespace detail {

/// Evaluates fn(0..n-1) on worker threads; results in index order.
template <class R, class Fn>
std::vector<R> parallel_map(std::size_t n, Fn&& fn) {
  std::vector<R> out(n);
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), 16));
  if (n < 8 || workers == 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < n; i += workers) out[i] = fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

template <class T>
std::vector<T> unit_vector(int n, int i) {
  std::vector<T> v(static_cast<std::size_t>(n), T(0));
  v[static_cast<std::size_t>(i)] = T(1);
  return v;
}

}  // namespace detail

/// Row space of all basis products a o b with a in A(H x K), b in A(K x H),
/// |K| < |H|, K from the catalog.
template <GreenBackend B>
RowEchelon<typename B::Scalar> ideal_rows(const B& backend, const FiniteGroup& h) {
  using T = typename B::Scalar;
  auto hh = direct_product(h, h).group;
  const int n = backend.dim(hh);
  RowEchelon<T> ech(static_cast<std::size_t>(n));
  for (const auto& k : groups_smaller_than(h.order())) {
    if (ech.full()) break;
    auto hk = direct_product(h, k).group, kh = direct_product(k, h).group;
    const int da = backend.dim(hk), db = backend.dim(kh);
    // warm shared caches before going parallel
    backend.compose(h, k, h, detail::unit_vector<T>(da, 0), detail::unit_vector<T>(db, 0));
    auto products = detail::parallel_map<std::vector<T>>(static_cast<std::size_t>(da) * db, [&](std::size_t p) {
      return backend.compose(h, k, h, detail::unit_vector<T>(da, static_cast<int>(p / db)),
                             detail::unit_vector<T>(db, static_cast<int>(p % db)));
    });
    for (auto& v : products) {
      ech.insert(std::move(v));
      if (ech.full()) break;
    }
  }
  return ech;
}

template <GreenBackend B>
IdealReport report_from_rows(const B& backend, const FiniteGroup& h, const RowEchelon<typename B::Scalar>& ech) {
  using T = typename B::Scalar;
  auto hh = direct_product(h, h).group;
  auto labels = backend.basis(hh);
  const int n = static_cast<int>(labels.size());
  IdealReport r;
  r.backend = backend.name();
  r.group = h;
  r.ambient_dim = n;
  r.ideal_dim = static_cast<int>(ech.rank());
  r.quotient_dim = n - r.ideal_dim;
  auto extended = ech;
  for (int i = 0; i < n && static_cast<int>(extended.rank()) < n; ++i)
    if (extended.insert(detail::unit_vector<T>(n, i))) {
      r.quotient_basis.push_back(labels[i]);
      r.quotient_indices.push_back(i);
    }
  return r;
}

template <GreenBackend B>
IdealReport ideal_span(const B& backend, const FiniteGroup& h) {
  return report_from_rows(backend, h, ideal_rows(backend, h));
}

template <GreenBackend B>
int ahat_dim(const B& backend, const FiniteGroup& h) {
  return ideal_span(backend, h).quotient_dim;
}

/// Checks that I_A(H) absorbs composition with every basis element of A(H x H).
template <GreenBackend B>
bool ideal_is_two_sided(const B& backend, const FiniteGroup& h, const RowEchelon<typename B::Scalar>& ech) {
  using T = typename B::Scalar;
  auto hh = direct_product(h, h).group;
  const int n = backend.dim(hh);
  for (const auto& row : ech.rows())
    for (int i = 0; i < n; ++i) {
      auto e = detail::unit_vector<T>(n, i);
      if (!ech.contains(backend.compose(h, h, h, e, row))) return false;
      if (!ech.contains(backend.compose(h, h, h, row, e))) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// RB: A^(H) against ROut(H)

struct OutIsoReport {
  int quotient_dim = 0;
  int out_order = 0;
  bool basis_is_twisted_diagonals = false;
  bool match = false;
};

inline OutIsoReport check_out_iso(const FiniteGroup& h) {
  auto rep = ideal_span(RBBackend{}, h);
  auto auts = automorphisms(h);
  auto p = direct_product(h, h);
  const auto& lat = lattice(p.group);
  std::vector<int> deltas;
  for (const auto& s : auts.all) deltas.push_back(lat.class_id(twisted_diagonal(p, s)));
  std::sort(deltas.begin(), deltas.end());
  deltas.erase(std::unique(deltas.begin(), deltas.end()), deltas.end());
  OutIsoReport r;
  r.quotient_dim = rep.quotient_dim;
  r.out_order = auts.out_order;
  r.basis_is_twisted_diagonals = deltas == rep.quotient_indices && static_cast<int>(deltas.size()) == auts.out_order;
  r.match = r.quotient_dim == r.out_order && r.basis_is_twisted_diagonals;
  return r;
}

// ---------------------------------------------------------------------------
// kR_Q for cyclic groups: units, x_n, primitive characters

inline std::vector<long> units_mod(long m) {
  require(m >= 1, ErrorCode::InvalidInput, "modulus must be positive");
  std::vector<long> out;
  for (long t = 0; t < m; ++t)
    if (std::gcd(t, m) == 1) out.push_back(t);
  return out;
}

/// (Z/mZ)^x as a group, element i standing for units_mod(m)[i].
inline FiniteGroup unit_group(long m) {
  auto u = units_mod(m);
  const int n = static_cast<int>(u.size());
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      long p = u[i] * u[j] % m;
      rows[i][j] = static_cast<int>(std::lower_bound(u.begin(), u.end(), p) - u.begin());
    }
  return FiniteGroup::from_table(rows, "U" + std::to_string(m));
}

inline std::vector<long> proper_divisors(long m) {
  std::vector<long> out;
  for (long n = 1; n < m; ++n)
    if (m % n == 0) out.push_back(n);
  return out;
}

/// x_n = sum of [t] over Ker(pi_{m,n}), as a vector over units_mod(m).
inline std::vector<Rational> xn_element(long m, long n) {
  require(m >= 1 && n >= 1 && m % n == 0 && n < m, ErrorCode::NotDivisor,
          std::to_string(n) + " is not a proper divisor of " + std::to_string(m));
  auto u = units_mod(m);
  std::vector<Rational> v(u.size(), Rational(0));
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] % n == 1 % n) v[i] = 1;
  return v;
}

/// dim of the ideal of Q(Z/mZ)^x generated by the x_n.
inline int xn_ideal_dim(long m) {
  auto u = units_mod(m);
  const std::size_t n = u.size();
  RowEchelon<Rational> ech(n);
  for (long d : proper_divisors(m)) {
    auto x = xn_element(m, d);
    for (std::size_t s = 0; s < n; ++s) {
      std::vector<Rational> row(n, Rational(0));
      for (std::size_t i = 0; i < n; ++i)
        if (x[i] != 0) {
          long p = u[s] * u[i] % m;
          row[static_cast<std::size_t>(std::lower_bound(u.begin(), u.end(), p) - u.begin())] += x[i];
        }
      ech.insert(row);
    }
  }
  return static_cast<int>(ech.rank());
}

/// Linear characters of (Z/mZ)^x, in character_table order.
inline const std::vector<CharacterVector>& unit_characters(long m) { return character_table(unit_group(m)); }

/// Characters nontrivial on Ker(pi_{m,n}) for every proper divisor n.
inline std::vector<int> primitive_characters(long m) {
  auto u = units_mod(m);
  const auto& chars = unit_characters(m);
  std::vector<int> out;
  for (std::size_t c = 0; c < chars.size(); ++c) {
    bool primitive = true;
    for (long n : proper_divisors(m)) {
      bool trivial_on_kernel = true;
      for (std::size_t i = 0; i < u.size(); ++i)
        if (u[i] % n == 1 % n && chars[c].at(static_cast<Element>(i)) != Cyclotomic(1)) trivial_on_kernel = false;
      if (trivial_on_kernel) primitive = false;
    }
    if (primitive) out.push_back(static_cast<int>(c));
  }
  return out;
}

struct Seed {
  long m = 1;
  int character = 0;
  std::string key;
};

inline constexpr long kMaxSeedModulus = 64;

inline std::vector<Seed> seeds_kRQ(long max_m) {
  require(max_m >= 1 && max_m <= kMaxSeedModulus, ErrorCode::InvalidInput, "max_m must be in 1..64");
  std::vector<Seed> out;
  for (long m = 1; m <= max_m; ++m)
    for (int c : primitive_characters(m)) out.push_back({m, c, "C" + std::to_string(m) + "/chi" + std::to_string(c)});
  return out;
}

/// Seeds per modulus counted the second way: phi(m) minus the x_n ideal dimension.
inline int seed_count_by_ideal(long m) { return static_cast<int>(units_mod(m).size()) - xn_ideal_dim(m); }

/// Transports character `chi` of Aut(H) = (Z/mZ)^x along an isomorphism
/// phi: H -> G of cyclic groups (sigma -> phi sigma phi^-1) and checks that it
/// is the same character of (Z/mZ)^x.
inline bool transport_preserves_character(long m, int chi, const GroupHom& phi) {
  const auto& h = phi.domain();
  const auto& g = phi.codomain();
  require(h.order() == m && g.order() == m && phi.is_bijective(), ErrorCode::InvalidInput,
          "transport needs an isomorphism of cyclic groups of order m");
  auto u = units_mod(m);
  const auto& chars = unit_characters(m);
  require(chi >= 0 && chi < static_cast<int>(chars.size()), ErrorCode::InvalidInput, "character index out of range");
  auto gen_of = [](const FiniteGroup& x) {
    for (int e = 0; e < x.order(); ++e)
      if (x.element_order(static_cast<Element>(e)) == x.order()) return static_cast<Element>(e);
    fail(ErrorCode::InvalidInput, x.label() + " is not cyclic");
  };
  Element h0 = gen_of(h), g0 = gen_of(g);
  auto inv = phi.inverse();
  for (std::size_t i = 0; i < u.size(); ++i) {
    // sigma_t(h0^j) = h0^{jt}
    std::vector<Element> sigma(static_cast<std::size_t>(m));
    for (long j = 0; j < m; ++j) sigma[h.pow(h0, static_cast<int>(j))] = h.pow(h0, static_cast<int>(j * u[i] % m));
    Element image = phi(sigma[inv(g0)]);
    long t2 = -1;
    for (long j = 0; j < m; ++j)
      if (g.pow(g0, static_cast<int>(j)) == image) t2 = j;
    auto pos = std::lower_bound(u.begin(), u.end(), t2) - u.begin();
    if (chars[chi].at(static_cast<Element>(pos)) != chars[chi].at(static_cast<Element>(i))) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// The kernel of l_H : k(Z/mZ)^x -> kR_Q^(H)

struct EllKernelReport {
  long m = 1;
  int units = 0;
  int xn_ideal_dim = 0;
  int ell_kernel_dim = 0;
  int quotient_dim = 0;
  int primitive_count = 0;
  bool match = false;
};

inline EllKernelReport ell_kernel_report(long m) {
  auto h = cyclic_group(static_cast<int>(m));
  RQBackend rq;
  auto ech = ideal_rows(rq, h);
  auto p = direct_product(h, h);
  const auto& ids = detail::rq_solver(p.group).ids;
  const auto& lat = lattice(p.group);
  const int n = static_cast<int>(ids.size());
  auto u = units_mod(m);
  Element gen = 0;
  for (int e = 0; e < h.order(); ++e)
    if (h.element_order(static_cast<Element>(e)) == m) gen = static_cast<Element>(e);
  // [t] -> class of Delta_{sigma_t}(H) in the cyclic basis
  auto extended = ech;
  for (long t : u) {
    std::vector<Element> im(static_cast<std::size_t>(m));
    for (long j = 0; j < m; ++j) im[h.pow(gen, static_cast<int>(j))] = h.pow(gen, static_cast<int>(j * t % m));
    auto delta = lat.class_id(twisted_diagonal(p, GroupHom(h, h, im)));
    auto pos = std::find(ids.begin(), ids.end(), delta) - ids.begin();
    require(pos < n, ErrorCode::Internal, "twisted diagonal is not cyclic");
    extended.insert(detail::unit_vector<Rational>(n, static_cast<int>(pos)));
  }
  EllKernelReport r;
  r.m = m;
  r.units = static_cast<int>(u.size());
  r.xn_ideal_dim = xn_ideal_dim(m);
  r.ell_kernel_dim = r.units - static_cast<int>(extended.rank() - ech.rank());
  r.quotient_dim = n - static_cast<int>(ech.rank());
  r.primitive_count = static_cast<int>(primitive_characters(m).size());
  r.match = r.xn_ideal_dim == r.ell_kernel_dim && r.quotient_dim == r.primitive_count;
  return r;
}

// ---------------------------------------------------------------------------
// CR_C(G x K) spanned by products of irreducibles

struct CrcSpanReport {
  int product_rank = 0;
  int target_dim = 0;
  bool match = false;
};

inline CrcSpanReport crc_product_span(const FiniteGroup& g, const FiniteGroup& k) {
  auto p = direct_product(g, k);
  require(p.group.order() <= kCharacterTableMaxOrder, ErrorCode::OrderBound, "G x K too large for character tables");
  const auto& tg = character_table(g);
  const auto& tk = character_table(k);
  const int nc = element_classes(p.group).count();
  RowEchelon<Cyclotomic> ech(static_cast<std::size_t>(nc));
  for (const auto& chi : tg)
    for (const auto& psi : tk) ech.insert(outer_tensor(p, chi, psi).values);
  return {static_cast<int>(ech.rank()), nc, static_cast<int>(ech.rank()) == nc};
}

// ---------------------------------------------------------------------------
// RB_C quotient: full span when small, otherwise the summand criterion

inline IdealReport rbc_ideal_report(const FiniteGroup& h, const FiniteGroup& c) {
  RBCBackend backend{c};
  if (h.order() == 1 || (h.order() <= 4 && c.order() == 2)) return ideal_span(backend, h);
  // A class absent from the support of every product of transitive classes
  // is independent modulo I, as all structure constants are non-negative.
  auto hh = direct_product(h, h).group;
  auto labels = backend.basis(hh);
  const int n = static_cast<int>(labels.size());
  std::vector<char> reached(static_cast<std::size_t>(n), 0);
  for (const auto& k : groups_smaller_than(h.order())) {
    auto pa = triple_product(h, k, c), pb = triple_product(k, h, c);
    for (const auto& a : dress_transitive_classes(pa))
      for (const auto& b : dress_transitive_classes(pb))
        for (const auto& ab = dress_compose(a, b); const auto& [cls, q] : ab.terms())
          reached[static_cast<std::size_t>(cls)] = 1;
  }
  IdealReport r;
  r.backend = backend.name();
  r.group = h;
  r.ambient_dim = n;
  r.ideal_dim = -1;
  r.quotient_dim = -1;
  r.determined = false;
  for (int i = 0; i < n; ++i)
    if (!reached[static_cast<std::size_t>(i)]) {
      r.quotient_basis.push_back(labels[i]);
      r.quotient_indices.push_back(i);
    }
  return r;
}

}  // namespace bisetkit
