#include "drz/rings.hpp"

#include "drz/generators.hpp"

namespace drz {

FiniteTable::FiniteTable(std::vector<std::vector<int>> add,
                         std::vector<std::vector<int>> mul,
                         std::vector<std::string> labels)
    : size_(static_cast<int>(add.size())), labels_(std::move(labels)) {
  const int n = size_;
  if (n == 0) throw InvalidDomain("empty ring table");
  auto flatten = [n](const std::vector<std::vector<int>>& t, const char* what) {
    std::vector<int> flat;
    flat.reserve(static_cast<std::size_t>(n) * n);
    if (static_cast<int>(t.size()) != n)
      throw InvalidDomain(std::string(what) + " table is not square");
    for (const auto& row : t) {
      if (static_cast<int>(row.size()) != n)
        throw InvalidDomain(std::string(what) + " table is not square");
      for (int v : row) {
        if (v < 0 || v >= n)
          throw InvalidDomain(std::string(what) + " table entry out of range");
        flat.push_back(v);
      }
    }
    return flat;
  };
  add_ = flatten(add, "addition");
  mul_ = flatten(mul, "multiplication");
  if (labels_.empty()) {
    labels_.reserve(n);
    for (int i = 0; i < n; ++i) labels_.push_back("e" + std::to_string(i));
  }
  if (static_cast<int>(labels_.size()) != n)
    throw InvalidDomain("label count does not match ring size");

  // Additive identity, commutativity and inverses are checked in full.
  for (int z = 0; z < n; ++z) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = this->add(z, i) == i && this->add(i, z) == i;
    if (ok) {
      zero_ = z;
      break;
    }
  }
  if (zero_ < 0) throw InvalidDomain("ring table has no additive identity");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (this->add(i, j) != this->add(j, i))
        throw InvalidDomain("ring addition is not commutative");
  neg_.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      if (this->add(i, j) == zero_) {
        neg_[i] = j;
        break;
      }
    if (neg_[i] < 0) throw InvalidDomain("ring element without additive inverse");
  }
  for (int o = 0; o < n; ++o) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = this->mul(o, i) == i && this->mul(i, o) == i;
    if (ok) {
      one_ = o;
      break;
    }
  }
  if (one_ < 0) throw InvalidDomain("ring table has no unity");
  if (one_ == zero_) throw InvalidDomain("ring unity equals zero");

  // Associativity/distributivity audit on seeded random triples.
  const std::uint64_t total = static_cast<std::uint64_t>(n) * n * n;
  const std::uint64_t samples = total < 10000 ? total : 10000;
  SplitMix64 g(0x7ab1e5ull ^ static_cast<std::uint64_t>(n));
  for (std::uint64_t s = 0; s < samples; ++s) {
    int a, b, c;
    if (total == samples) {
      a = static_cast<int>(s / (static_cast<std::uint64_t>(n) * n));
      b = static_cast<int>((s / n) % n);
      c = static_cast<int>(s % n);
    } else {
      a = static_cast<int>(g.below(n));
      b = static_cast<int>(g.below(n));
      c = static_cast<int>(g.below(n));
    }
    if (this->add(this->add(a, b), c) != this->add(a, this->add(b, c)))
      throw InvalidDomain("ring addition fails associativity");
    if (this->mul(this->mul(a, b), c) != this->mul(a, this->mul(b, c)))
      throw InvalidDomain("ring multiplication fails associativity");
    if (this->mul(a, this->add(b, c)) != this->add(this->mul(a, b), this->mul(a, c)))
      throw InvalidDomain("ring fails left distributivity");
    if (this->mul(this->add(a, b), c) != this->add(this->mul(a, c), this->mul(b, c)))
      throw InvalidDomain("ring fails right distributivity");
  }
}

std::shared_ptr<const FiniteTable> FiniteTable::zn(std::uint64_t n) {
  if (n < 2 || n > 4096) throw InvalidDomain("table Z_n supports 2 <= n <= 4096");
  const int m = static_cast<int>(n);
  std::vector<std::vector<int>> add(m, std::vector<int>(m));
  std::vector<std::vector<int>> mul(m, std::vector<int>(m));
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) {
    labels[i] = std::to_string(i);
    for (int j = 0; j < m; ++j) {
      add[i][j] = static_cast<int>((static_cast<std::uint64_t>(i) + j) % n);
      mul[i][j] = static_cast<int>((static_cast<std::uint64_t>(i) * j) % n);
    }
  }
  return std::make_shared<const FiniteTable>(std::move(add), std::move(mul),
                                             std::move(labels));
}

}  // namespace drz
