#include "hlq/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <stdexcept>

namespace hlq {

namespace {

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const auto end = comma == std::string_view::npos ? text.size() : comma;
    auto token = text.substr(pos, end - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw std::invalid_argument("malformed integer list: '" + std::string(text) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

Partition from_columns(const std::vector<int>& cols) {
  std::vector<int> c;
  for (int v : cols) {
    if (v > 0) c.push_back(v);
  }
  return Partition(std::move(c)).conjugate();
}

}  // namespace

Partition::Partition(std::vector<int> parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    weight_ += parts[i];
  }
  parts_ = std::move(parts);
}

Partition Partition::parse(std::string_view text) {
  if (text.empty() || text == "0") return {};
  return Partition(parse_int_list(text));
}

Partition Partition::conjugate() const {
  std::vector<int> conj(static_cast<std::size_t>(largest()), 0);
  for (int p : parts_) {
    for (int j = 0; j < p; ++j) ++conj[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(conj));
}

int Partition::column(int j) const {
  if (j < 1) return 0;
  int count = 0;
  for (int p : parts_) {
    if (p < j) break;
    ++count;
  }
  return count;
}

bool Partition::contains(const Partition& mu) const {
  if (mu.length() > length()) return false;
  for (int i = 1; i <= mu.length(); ++i) {
    if (mu.part(static_cast<std::size_t>(i)) > part(static_cast<std::size_t>(i))) return false;
  }
  return true;
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

long long n_stat(const Partition& lambda) {
  long long n = 0;
  for (int i = 1; i <= lambda.length(); ++i) {
    n += static_cast<long long>(i - 1) * lambda.part(static_cast<std::size_t>(i));
  }
  return n;
}

long long n_stat_by_columns(const Partition& lambda) {
  long long n = 0;
  const Partition conj = lambda.conjugate();
  for (int c : conj.parts()) n += static_cast<long long>(c) * (c - 1) / 2;
  return n;
}

long long dot(std::span<const int> a, std::span<const int> b) {
  long long s = 0;
  const auto n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) s += static_cast<long long>(a[i]) * b[i];
  return s;
}

long long dot(const Partition& lambda, const Partition& mu) { return dot(lambda.parts(), mu.parts()); }

int multiplicity(const Partition& lambda, int i) {
  if (i < 1) throw std::invalid_argument("multiplicity index must be >= 1");
  return static_cast<int>(std::count(lambda.parts().begin(), lambda.parts().end(), i));
}

bool is_horizontal_strip(const Partition& lambda, const Partition& mu) {
  if (!lambda.contains(mu)) return false;
  // Column j gains at most one square iff mu_i >= lambda_{i+1} for all i.
  for (int i = 1; i < lambda.length(); ++i) {
    if (mu.part(static_cast<std::size_t>(i)) < lambda.part(static_cast<std::size_t>(i + 1))) return false;
  }
  return true;
}

StripMask::StripMask(std::vector<int> bits) : bits_(std::move(bits)) {
  for (int b : bits_) {
    if (b != 0 && b != 1) throw std::invalid_argument("strip mask entries must be 0 or 1");
  }
}

StripMask StripMask::parse(std::string_view text) {
  std::vector<int> bits;
  for (char c : text) {
    if (c != '0' && c != '1') throw std::invalid_argument("strip mask must be a bit string such as 0110");
    bits.push_back(c - '0');
  }
  return StripMask(std::move(bits));
}

std::vector<StripMask> StripMask::all(int length) {
  std::vector<StripMask> out;
  const unsigned count = 1u << static_cast<unsigned>(length);
  for (unsigned code = 0; code < count; ++code) {
    std::vector<int> bits(static_cast<std::size_t>(length));
    for (int i = 0; i < length; ++i) bits[static_cast<std::size_t>(i)] = (code >> (length - 1 - i)) & 1u;
    out.emplace_back(std::move(bits));
  }
  return out;
}

int StripMask::ones() const { return static_cast<int>(std::count(bits_.begin(), bits_.end(), 1)); }

std::vector<int> StripMask::ascents() const {
  std::vector<int> j;
  for (int i = 1; i < size(); ++i) {
    if ((*this)[i] == 0 && (*this)[i + 1] == 1) j.push_back(i);
  }
  return j;
}

std::vector<int> StripMask::descents() const {
  std::vector<int> d;
  for (int i = 1; i < size(); ++i) {
    if ((*this)[i] == 1 && (*this)[i + 1] == 0) d.push_back(i);
  }
  return d;
}

std::string StripMask::to_string() const {
  std::string s;
  for (int b : bits_) s += static_cast<char>('0' + b);
  return s;
}

std::vector<Partition> enumerate_partitions(int weight, EnumerationLimits limits) {
  std::vector<Partition> out;
  if (weight < 0) return out;
  const int max_len = limits.max_length.value_or(weight);
  const int max_part = limits.max_part.value_or(weight);
  std::vector<int> current;
  // Parts chosen largest-first, so output is reverse-lexicographic.
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    if (static_cast<int>(current.size()) >= max_len) return;
    for (int p = std::min(remaining, cap); p >= 1; --p) {
      // Remaining slots must be able to absorb what is left.
      const long long slots = max_len - static_cast<int>(current.size());
      if (static_cast<long long>(p) * slots < remaining) break;
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(weight, max_part);
  return out;
}

std::vector<Partition> enumerate_up_to(int max_weight, EnumerationLimits limits) {
  std::vector<Partition> out;
  for (int w = 0; w <= max_weight; ++w) {
    auto part = enumerate_partitions(w, limits);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

std::vector<Partition> enumerate_by_norm(long long max_norm, EnumerationLimits limits) {
  std::vector<Partition> out;
  if (max_norm < 0) return out;
  const int max_len = limits.max_length.value_or(static_cast<int>(max_norm));
  int root = 0;
  while (static_cast<long long>(root + 1) * (root + 1) <= max_norm) ++root;
  const int max_part = std::min(limits.max_part.value_or(root), root);
  std::vector<int> current;
  std::function<void(long long, int)> rec = [&](long long budget, int cap) {
    out.emplace_back(current);
    if (static_cast<int>(current.size()) >= max_len) return;
    for (int p = cap; p >= 1; --p) {
      const long long cost = static_cast<long long>(p) * p;
      if (cost > budget) continue;
      current.push_back(p);
      rec(budget - cost, p);
      current.pop_back();
    }
  };
  rec(max_norm, max_part);
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    if (a.weight() != b.weight()) return a.weight() < b.weight();
    return a > b;
  });
  return out;
}

std::vector<Partition> strips_over(const Partition& mu, int boxes, const std::optional<StripMask>& prefix) {
  if (boxes < 0) throw std::invalid_argument("strips_over: negative box count");
  const int k = prefix ? prefix->size() : 0;
  if (prefix && prefix->ones() > boxes) return {};
  const int ncols = std::max(mu.largest() + boxes, k);
  std::vector<int> mu_cols(static_cast<std::size_t>(ncols + 2), 0);
  for (int j = 1; j <= ncols + 1; ++j) mu_cols[static_cast<std::size_t>(j)] = mu.column(j);

  std::vector<int> lam_cols(static_cast<std::size_t>(ncols + 2), 0);
  std::vector<Partition> out;
  std::function<void(int, int)> rec = [&](int j, int left) {
    if (j > ncols) {
      if (left == 0) out.push_back(from_columns(lam_cols));
      return;
    }
    for (int t = 1; t >= 0; --t) {
      if (j <= k && (*prefix)[j] != t) continue;
      if (t > left) continue;
      const int c = mu_cols[static_cast<std::size_t>(j)] + t;
      if (j > 1 && c > lam_cols[static_cast<std::size_t>(j - 1)]) continue;
      lam_cols[static_cast<std::size_t>(j)] = c;
      rec(j + 1, left - t);
    }
    lam_cols[static_cast<std::size_t>(j)] = 0;
  };
  rec(1, boxes);
  std::sort(out.begin(), out.end(), std::greater<>());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Partition> strips_under(const Partition& lambda) {
  const int ncols = lambda.largest();
  std::vector<int> lam_cols(static_cast<std::size_t>(ncols + 1), 0);
  for (int j = 1; j <= ncols; ++j) lam_cols[static_cast<std::size_t>(j)] = lambda.column(j);
  std::vector<int> nu_cols(static_cast<std::size_t>(ncols + 1), 0);
  std::vector<Partition> out;
  std::function<void(int)> rec = [&](int j) {
    if (j > ncols) {
      out.push_back(from_columns(nu_cols));
      return;
    }
    for (int t = 0; t <= 1; ++t) {
      const int c = lam_cols[static_cast<std::size_t>(j)] - t;
      if (c < 0) continue;
      if (j > 1 && c > nu_cols[static_cast<std::size_t>(j - 1)]) continue;
      nu_cols[static_cast<std::size_t>(j)] = c;
      rec(j + 1);
    }
  };
  rec(1);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace hlq
