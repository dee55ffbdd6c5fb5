#pragma once

// Ring contexts: the ambient structures Drazin computations run in.
//
//   MatrixRing<S>   n x n matrices over an exact field (engine-backed)
//   ModularRing     the scalar ring Z_n, n possibly composite (oracle-backed)
//   IntegerRing     the scalar ring Z
//   TableRing       an arbitrary finite ring given by operation tables
//
// The finite contexts double as independent oracles: their Drazin inverses
// come from exhaustive search over the defining axioms, with the uniqueness
// of any match asserted during enumeration.

#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "drazin.hpp"
#include "matrix.hpp"

namespace drz {

inline constexpr std::uint64_t kEnumerationCap = 100000;

inline int ceil_log2_u64(std::uint64_t n) {
  int b = 0;
  std::uint64_t v = 1;
  while (v < n) {
    v <<= 1;
    ++b;
  }
  return b;
}

// ---------------------------------------------------------------------------
// Matrix ring over a field.
// ---------------------------------------------------------------------------

template <FieldScalar S>
struct MatrixRing {
  using Elem = Matrix<S>;

  MatrixRing(int n, const Domain& dom) : n_(n), dom_(dom) {}

  int dim() const { return n_; }
  const Domain& domain() const { return dom_; }

  Elem zero() const { return Matrix<S>(n_, n_, dom_); }
  Elem one() const { return Matrix<S>::identity(n_, dom_); }
  int nil_bound() const { return n_; }

  std::optional<DrazinResult<Elem>> drazin(const Elem& a) const {
    return drz::drazin(a);  // matrices over a field are always Drazin invertible
  }

  std::optional<Elem> try_inverse(const Elem& a) const {
    if (!is_invertible(a)) return std::nullopt;
    return inverse(a);
  }

  std::string describe(const Elem& a) const {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < a.rows(); ++i) {
      if (i) os << "; ";
      for (int j = 0; j < a.cols(); ++j) {
        if (j) os << ' ';
        os << a(i, j).str();
      }
    }
    os << ']';
    return os.str();
  }

 private:
  int n_;
  Domain dom_;
};

// ---------------------------------------------------------------------------
// Scalar ring Z_n.
// ---------------------------------------------------------------------------

struct ModularRing {
  using Elem = Zn;

  explicit ModularRing(std::uint64_t n, std::uint64_t cap = kEnumerationCap)
      : n_(n), cap_(cap) {
    if (n < 2) throw InvalidDomain("Z_n needs n >= 2");
  }

  std::uint64_t modulus() const { return n_; }
  Elem zero() const { return Zn(0, n_); }
  Elem one() const { return Zn(1, n_); }
  int nil_bound() const { return ceil_log2_u64(n_) < 1 ? 1 : ceil_log2_u64(n_); }

  std::uint64_t size() const {
    if (n_ > cap_)
      throw ContextTooLarge("enumerating Z_" + std::to_string(n_) +
                            " exceeds cap " + std::to_string(cap_));
    return n_;
  }
  Elem element(std::uint64_t i) const { return Zn(i, n_); }

  std::optional<DrazinResult<Elem>> drazin(const Elem& a) const;

  std::optional<Elem> try_inverse(const Elem& a) const { return a.try_inverse(); }
  std::string describe(const Elem& a) const { return a.str(); }

 private:
  std::uint64_t n_, cap_;
};

// ---------------------------------------------------------------------------
// The ring of integers.
// ---------------------------------------------------------------------------

// Z has no nonzero nilpotents and only the units 1 and -1, so exactly
// -1, 0 and 1 are Drazin invertible, each being its own inverse.
inline std::optional<DrazinResult<Int>> integer_drazin(const Int& a) {
  if (a.is_zero())
    return DrazinResult<Int>{Int(0), 1, Int(1), 1};
  if (a.is_unit())
    return DrazinResult<Int>{a, 0, Int(0), 1};
  return std::nullopt;
}

struct IntegerRing {
  using Elem = Int;

  Elem zero() const { return Int(0); }
  Elem one() const { return Int(1); }
  int nil_bound() const { return 1; }

  std::optional<DrazinResult<Elem>> drazin(const Elem& a) const {
    return integer_drazin(a);
  }
  std::optional<Elem> try_inverse(const Elem& a) const { return a.try_inverse(); }
  std::string describe(const Elem& a) const { return a.str(); }
};

// ---------------------------------------------------------------------------
// Finite rings presented by operation tables.
// ---------------------------------------------------------------------------

class FiniteTable;

struct TableElem {
  const FiniteTable* table = nullptr;
  int idx = 0;

  TableElem operator+(const TableElem& o) const;
  TableElem operator-(const TableElem& o) const;
  TableElem operator*(const TableElem& o) const;
  TableElem operator-() const;
  bool operator==(const TableElem& o) const {
    return table == o.table && idx == o.idx;
  }
};

// An associative unital ring given by |R| x |R| addition/multiplication
// tables.  Zero/one indices, abelian addition and additive inverses are
// verified in full at construction; associativity and distributivity are
// spot-checked on min(|R|^3, 10^4) deterministically seeded random triples.
class FiniteTable {
 public:
  FiniteTable(std::vector<std::vector<int>> add,
              std::vector<std::vector<int>> mul,
              std::vector<std::string> labels = {});

  static std::shared_ptr<const FiniteTable> zn(std::uint64_t n);

  int size() const { return size_; }
  int zero_index() const { return zero_; }
  int one_index() const { return one_; }
  const std::string& label(int i) const { return labels_[i]; }

  int add(int i, int j) const { return add_[static_cast<std::size_t>(i) * size_ + j]; }
  int mul(int i, int j) const { return mul_[static_cast<std::size_t>(i) * size_ + j]; }
  int neg(int i) const { return neg_[i]; }

 private:
  int size_;
  std::vector<int> add_, mul_, neg_;
  int zero_ = -1, one_ = -1;
  std::vector<std::string> labels_;
};

inline TableElem TableElem::operator+(const TableElem& o) const {
  if (table != o.table) throw DomainMismatch("table elements from different rings");
  return {table, table->add(idx, o.idx)};
}
inline TableElem TableElem::operator*(const TableElem& o) const {
  if (table != o.table) throw DomainMismatch("table elements from different rings");
  return {table, table->mul(idx, o.idx)};
}
inline TableElem TableElem::operator-() const { return {table, table->neg(idx)}; }
inline TableElem TableElem::operator-(const TableElem& o) const {
  return *this + (-o);
}

inline TableElem zero_like(const TableElem& a) {
  return {a.table, a.table->zero_index()};
}
inline TableElem one_like(const TableElem& a) {
  return {a.table, a.table->one_index()};
}

struct TableRing {
  using Elem = TableElem;

  explicit TableRing(std::shared_ptr<const FiniteTable> t,
                     std::uint64_t cap = kEnumerationCap)
      : table_(std::move(t)), cap_(cap) {}

  const FiniteTable& table() const { return *table_; }

  Elem zero() const { return {table_.get(), table_->zero_index()}; }
  Elem one() const { return {table_.get(), table_->one_index()}; }
  int nil_bound() const { return table_->size(); }

  std::uint64_t size() const {
    if (static_cast<std::uint64_t>(table_->size()) > cap_)
      throw ContextTooLarge("table ring enumeration exceeds cap");
    return static_cast<std::uint64_t>(table_->size());
  }
  Elem element(std::uint64_t i) const {
    return {table_.get(), static_cast<int>(i)};
  }

  std::optional<DrazinResult<Elem>> drazin(const Elem& a) const;

  std::optional<Elem> try_inverse(const Elem& a) const {
    for (int i = 0; i < table_->size(); ++i) {
      TableElem b{table_.get(), i};
      if (a * b == one() && b * a == one()) return b;
    }
    return std::nullopt;
  }
  std::string describe(const Elem& a) const { return table_->label(a.idx); }

 private:
  std::shared_ptr<const FiniteTable> table_;
  std::uint64_t cap_;
};

template <class C>
concept RingContext = requires(const C& c, const typename C::Elem& e) {
  requires RingElem<typename C::Elem>;
  { c.zero() } -> std::same_as<typename C::Elem>;
  { c.one() } -> std::same_as<typename C::Elem>;
  { c.nil_bound() } -> std::convertible_to<int>;
  { c.drazin(e) } -> std::same_as<std::optional<DrazinResult<typename C::Elem>>>;
  { c.try_inverse(e) } -> std::same_as<std::optional<typename C::Elem>>;
  { c.describe(e) } -> std::same_as<std::string>;
};

template <class C>
concept EnumerableRing = RingContext<C> && requires(const C& c, std::uint64_t i) {
  { c.size() } -> std::same_as<std::uint64_t>;
  { c.element(i) } -> std::same_as<typename C::Elem>;
};

// ---------------------------------------------------------------------------
// Exhaustive oracle.
// ---------------------------------------------------------------------------

// Search the whole ring for the unique b satisfying the defining axioms.
// Every element of a finite ring is Drazin invertible, so nullopt from a
// finite context means the caller's engine or tables are broken, not that
// the input was bad.  More than one match violates uniqueness and raises.
template <EnumerableRing C>
std::optional<DrazinResult<typename C::Elem>> brute_force_drazin(
    const typename C::Elem& a, const C& ctx) {
  using Elem = typename C::Elem;
  const int bound = ctx.nil_bound();
  std::optional<Elem> found;
  for (std::uint64_t i = 0; i < ctx.size(); ++i) {
    Elem b = ctx.element(i);
    if (!is_drazin_pair(a, b, bound)) continue;
    if (found)
      throw InternalCheckFailure("two Drazin inverses found for " +
                                 ctx.describe(a));
    found = b;
  }
  if (!found) return std::nullopt;
  const Elem& d = *found;
  return DrazinResult<Elem>{d, definitional_index(a, d, bound + 1),
                            ctx.one() - a * d,
                            *nilpotency_witness(a, d, bound)};
}

inline std::optional<DrazinResult<Zn>> ModularRing::drazin(const Elem& a) const {
  return brute_force_drazin(a, *this);
}

inline std::optional<DrazinResult<TableElem>> TableRing::drazin(
    const Elem& a) const {
  return brute_force_drazin(a, *this);
}

// ---------------------------------------------------------------------------
// Enumeration of small matrix rings over prime fields.
// ---------------------------------------------------------------------------

// Matrices over GF(q) indexed by base-q digit strings, row-major.
class MatrixEnumerator {
 public:
  MatrixEnumerator(const Domain& dom, int n,
                   std::uint64_t cap = kEnumerationCap)
      : dom_(dom), n_(n) {
    if (dom.kind() != DomainKind::PrimeField)
      throw UnsupportedDomain("matrix enumeration needs a prime field");
    const std::uint64_t q = dom.modulus();
    count_ = 1;
    for (int i = 0; i < n * n; ++i) {
      if (count_ > cap / q)
        throw ContextTooLarge("matrix enumeration " + std::to_string(q) + "^" +
                              std::to_string(n * n) + " exceeds cap " +
                              std::to_string(cap));
      count_ *= q;
    }
    if (count_ > cap)
      throw ContextTooLarge("matrix enumeration exceeds cap");
  }

  std::uint64_t count() const { return count_; }

  Matrix<Fp> at(std::uint64_t idx) const {
    const std::uint64_t q = dom_.modulus();
    Matrix<Fp> m(n_, n_, dom_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        m(i, j) = Fp(idx % q, q);
        idx /= q;
      }
    return m;
  }

 private:
  Domain dom_;
  int n_;
  std::uint64_t count_;
};

// Enumerable view of MatrixRing over a small prime field, for oracle runs.
struct EnumerableMatrixRing : MatrixRing<Fp> {
  EnumerableMatrixRing(int n, const Domain& dom,
                       std::uint64_t cap = kEnumerationCap)
      : MatrixRing<Fp>(n, dom), enumerator_(dom, n, cap) {}

  std::uint64_t size() const { return enumerator_.count(); }
  Elem element(std::uint64_t i) const { return enumerator_.at(i); }

 private:
  MatrixEnumerator enumerator_;
};

}  // namespace drz
