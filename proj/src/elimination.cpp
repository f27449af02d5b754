#include "elimination.hpp"

#include <algorithm>
#include <variant>

namespace lhd::detail {

namespace {

template <class T>
using Row = std::vector<std::pair<std::uint32_t, T>>;

template <class T>
const T* entry_at(const Row<T>& r, std::uint32_t col) {
  auto it = std::lower_bound(r.begin(), r.end(), col,
                             [](const auto& e, std::uint32_t c) { return e.first < c; });
  return (it != r.end() && it->first == col) ? &it->second : nullptr;
}

// Integer rows over Q, kept primitive with a positive leading entry.
struct RationalPolicy {
  using Value = mpz_class;

  static bool is_zero(const Value& v) { return sgn(v) == 0; }

  static Row<Value> from_field(SparseVector in) {
    mpz_class lcm = 1;
    for (const auto& [c, v] : in) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
    Row<Value> out;
    out.reserve(in.size());
    for (auto& [c, v] : in) {
      mpz_class n = v.get_num() * (lcm / v.get_den());
      if (sgn(n) != 0) out.emplace_back(c, std::move(n));
    }
    return out;
  }

  void normalize(Row<Value>& r) const {
    if (r.empty()) return;
    mpz_class g = 0;
    for (const auto& e : r) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.second.get_mpz_t());
      if (g == 1) break;
    }
    if (sgn(r.front().second) < 0) g = -g;
    if (g != 1)
      for (auto& e : r) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), g.get_mpz_t());
  }

  // r <- (s_c/g) r - (r_c/g) s, which clears column c of r.
  Row<Value> eliminate(const Row<Value>& r, const Row<Value>& s, std::uint32_t col) const {
    const mpz_class& rc = *entry_at(r, col);
    const mpz_class& sc = *entry_at(s, col);
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), rc.get_mpz_t(), sc.get_mpz_t());
    mpz_class a = sc / g, b = rc / g;
    Row<Value> out;
    out.reserve(r.size() + s.size());
    std::size_t i = 0, j = 0;
    while (i < r.size() || j < s.size()) {
      if (j == s.size() || (i < r.size() && r[i].first < s[j].first)) {
        out.emplace_back(r[i].first, a * r[i].second);
        ++i;
      } else if (i == r.size() || s[j].first < r[i].first) {
        out.emplace_back(s[j].first, -b * s[j].second);
        ++j;
      } else {
        mpz_class v = a * r[i].second - b * s[j].second;
        if (sgn(v) != 0) out.emplace_back(r[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    normalize(out);
    return out;
  }

  static SparseVector to_field(const Row<Value>& r) {
    SparseVector out;
    out.reserve(r.size());
    const mpz_class& lead = r.front().second;
    for (const auto& [c, v] : r) {
      mpq_class q(v, lead);
      q.canonicalize();
      out.emplace_back(c, std::move(q));
    }
    return out;
  }
};

struct PrimePolicy {
  using Value = std::uint64_t;
  std::uint64_t p;

  static bool is_zero(const Value& v) { return v == 0; }

  Row<Value> from_field(SparseVector in) const {
    Row<Value> out;
    out.reserve(in.size());
    for (const auto& [c, v] : in) {
      std::uint64_t x = v.get_num().get_ui() % p;
      if (x) out.emplace_back(c, x);
    }
    return out;
  }

  std::uint64_t inv(std::uint64_t a) const {
    std::uint64_t result = 1, base = a % p, e = p - 2;
    while (e) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return result;
  }

  void normalize(Row<Value>& r) const {
    if (r.empty() || r.front().second == 1) return;
    std::uint64_t s = inv(r.front().second);
    for (auto& e : r) e.second = e.second * s % p;
  }

  Row<Value> eliminate(const Row<Value>& r, const Row<Value>& s, std::uint32_t col) const {
    // s has a leading 1 only when col is its pivot; scale generally.
    const std::uint64_t f = (*entry_at(r, col)) * inv(*entry_at(s, col)) % p;
    Row<Value> out;
    out.reserve(r.size() + s.size());
    std::size_t i = 0, j = 0;
    while (i < r.size() || j < s.size()) {
      if (j == s.size() || (i < r.size() && r[i].first < s[j].first)) {
        out.push_back(r[i++]);
      } else if (i == r.size() || s[j].first < r[i].first) {
        out.emplace_back(s[j].first, (p - f * s[j].second % p) % p);
        ++j;
      } else {
        std::uint64_t v = (r[i].second + p - f * s[j].second % p) % p;
        if (v) out.emplace_back(r[i].first, v);
        ++i;
        ++j;
      }
    }
    normalize(out);
    return out;
  }

  SparseVector to_field(const Row<Value>& r) const {
    SparseVector out;
    out.reserve(r.size());
    for (const auto& [c, v] : r) out.emplace_back(c, mpq_class(v));
    return out;
  }
};

template <class Policy>
class Reducer {
 public:
  Reducer(Policy policy, std::size_t cols) : policy_(std::move(policy)), pivot_row_(cols, -1) {}

  void add(SparseVector in) {
    std::sort(in.begin(), in.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVector merged;
    for (auto& e : in) {
      if (!merged.empty() && merged.back().first == e.first)
        merged.back().second += e.second;
      else
        merged.push_back(std::move(e));
    }
    auto row = policy_.from_field(std::move(merged));
    policy_.normalize(row);
    while (!row.empty()) {
      const std::uint32_t lead = row.front().first;
      const int at = pivot_row_[lead];
      if (at < 0) {
        pivot_row_[lead] = static_cast<int>(rows_.size());
        rows_.push_back(std::move(row));
        return;
      }
      row = policy_.eliminate(row, rows_[at], lead);
    }
  }

  std::size_t rank() const { return rows_.size(); }

  std::vector<ReducedRow> reduced() {
    std::vector<std::size_t> order(rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return rows_[a].front().first > rows_[b].front().first; });
    // Largest pivot first: the eliminating row is already clear of every
    // later pivot column, so no cleared entry is reintroduced.
    for (std::size_t oi = 0; oi < order.size(); ++oi) {
      const auto& s = rows_[order[oi]];
      const std::uint32_t col = s.front().first;
      for (std::size_t oj = oi + 1; oj < order.size(); ++oj) {
        auto& t = rows_[order[oj]];
        if (entry_at(t, col)) t = policy_.eliminate(t, s, col);
      }
    }
    std::vector<ReducedRow> out;
    out.reserve(rows_.size());
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const auto& r = rows_[*it];
      out.push_back({r.front().first, policy_.to_field(r)});
    }
    return out;
  }

 private:
  Policy policy_;
  std::vector<Row<typename Policy::Value>> rows_;
  std::vector<int> pivot_row_;
};

}  // namespace

struct RowReducer::Impl {
  std::variant<Reducer<RationalPolicy>, Reducer<PrimePolicy>> reducer;
};

RowReducer::RowReducer(Field field, std::size_t cols)
    : impl_(field.is_rationals()
                ? std::make_unique<Impl>(Impl{Reducer<RationalPolicy>(RationalPolicy{}, cols)})
                : std::make_unique<Impl>(
                      Impl{Reducer<PrimePolicy>(PrimePolicy{field.characteristic()}, cols)})) {}

RowReducer::~RowReducer() = default;
RowReducer::RowReducer(RowReducer&&) noexcept = default;
RowReducer& RowReducer::operator=(RowReducer&&) noexcept = default;

void RowReducer::add_row(SparseVector row) {
  std::visit([&](auto& r) { r.add(std::move(row)); }, impl_->reducer);
}

std::size_t RowReducer::rank() const {
  return std::visit([](const auto& r) { return r.rank(); }, impl_->reducer);
}

std::vector<ReducedRow> RowReducer::reduced() {
  return std::visit([](auto& r) { return r.reduced(); }, impl_->reducer);
}

}  // namespace lhd::detail
