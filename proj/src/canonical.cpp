#include "hypertrop/canonical.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <tuple>

namespace hypertrop {

std::string CanonicalLabel::str() const {
  std::string out;
  for (std::size_t i = 0; i < code_.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(code_[i]);
  }
  return out;
}

std::string CanonicalLabel::digest() const {
  std::uint64_t h = 1469598103934665603ULL;
  for (int x : code_) {
    auto u = static_cast<std::uint32_t>(x);
    for (int b = 0; b < 4; ++b) {
      h ^= (u >> (8 * b)) & 0xffU;
      h *= 1099511628211ULL;
    }
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

class Canonizer {
 public:
  explicit Canonizer(const ConstrainedType& t) : t_(t), n_(t.graph().num_vertices()) {
    mult_.assign(n_, std::vector<int>(n_, 0));
    for (const auto& e : t.graph().edges()) {
      mult_[e.u][e.v] += 1;
      if (e.u != e.v) mult_[e.v][e.u] += 1;
    }
  }

  std::pair<std::vector<int>, std::vector<int>> run() {
    std::vector<std::tuple<int, int, int>> init(n_);
    for (int v = 0; v < n_; ++v) init[v] = {t_.weight(v), mult_[v][v], t_.graph().valence(v)};
    std::vector<int> colour = rank(init);
    refine(colour);
    search(colour);
    return {best_code_, best_order_};
  }

 private:
  template <typename Key>
  static std::vector<int> rank(const std::vector<Key>& keys) {
    std::vector<Key> sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> out(keys.size());
    for (std::size_t i = 0; i < keys.size(); ++i) {
      out[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), keys[i]) - sorted.begin());
    }
    return out;
  }

  static int count_colours(const std::vector<int>& c) {
    return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
  }

  void refine(std::vector<int>& colour) const {
    int classes = count_colours(colour);
    while (true) {
      std::vector<std::pair<int, std::vector<std::pair<int, int>>>> sig(n_);
      for (int v = 0; v < n_; ++v) {
        sig[v].first = colour[v];
        for (int u = 0; u < n_; ++u) {
          if (u != v && mult_[v][u] > 0) sig[v].second.emplace_back(colour[u], mult_[v][u]);
        }
        std::sort(sig[v].second.begin(), sig[v].second.end());
      }
      auto next = rank(sig);
      const int next_classes = count_colours(next);
      colour = std::move(next);
      if (next_classes == classes) return;
      classes = next_classes;
    }
  }

  std::vector<int> encode(const std::vector<int>& pos) const {
    std::vector<int> code;
    code.push_back(n_);
    std::vector<int> w(n_);
    for (int v = 0; v < n_; ++v) w[pos[v]] = t_.weight(v);
    code.insert(code.end(), w.begin(), w.end());
    std::vector<std::vector<int>> classes;
    for (const auto& cls : t_.classes()) {
      std::vector<std::pair<int, int>> pairs;
      for (int e : cls) {
        const auto& edge = t_.graph().edge(e);
        const int a = pos[edge.u];
        const int b = pos[edge.v];
        pairs.emplace_back(std::min(a, b), std::max(a, b));
      }
      std::sort(pairs.begin(), pairs.end());
      std::vector<int> flat{static_cast<int>(pairs.size())};
      for (auto [a, b] : pairs) {
        flat.push_back(a);
        flat.push_back(b);
      }
      classes.push_back(std::move(flat));
    }
    std::sort(classes.begin(), classes.end());
    code.push_back(static_cast<int>(classes.size()));
    for (const auto& c : classes) code.insert(code.end(), c.begin(), c.end());
    return code;
  }

  void search(const std::vector<int>& colour) {
    const int k = count_colours(colour);
    if (k == n_) {
      auto code = encode(colour);
      if (best_code_.empty() || code < best_code_) {
        best_code_ = std::move(code);
        best_order_.assign(n_, 0);
        for (int v = 0; v < n_; ++v) best_order_[colour[v]] = v;
      }
      return;
    }
    // First non-singleton cell in colour order.
    std::vector<int> size(k, 0);
    for (int c : colour) ++size[c];
    const int target = static_cast<int>(std::find_if(size.begin(), size.end(), [](int s) { return s > 1; }) - size.begin());
    for (int v = 0; v < n_; ++v) {
      if (colour[v] != target) continue;
      std::vector<std::pair<int, int>> key(n_);
      for (int u = 0; u < n_; ++u) key[u] = {colour[u], (colour[u] == target && u != v) ? 1 : 0};
      auto next = rank(key);
      refine(next);
      search(next);
    }
  }

  const ConstrainedType& t_;
  int n_;
  std::vector<std::vector<int>> mult_;
  std::vector<int> best_code_;
  std::vector<int> best_order_;
};

}  // namespace

CanonicalLabel canonical_form(const ConstrainedType& t) { return CanonicalLabel(Canonizer(t).run().first); }

std::vector<int> canonical_order(const ConstrainedType& t) { return Canonizer(t).run().second; }

}  // namespace hypertrop
