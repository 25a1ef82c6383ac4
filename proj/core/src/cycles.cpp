#include "skewmorph/cycles.hpp"

#include <cctype>
#include <numeric>
#include <stdexcept>

namespace skewmorph {

std::vector<int> parse_cycles(const std::string& text, int n) {
  if (n < 0) throw std::invalid_argument("negative permutation size");
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::vector<char> seen(n, 0);

  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') throw std::invalid_argument("expected '(' in cycle notation");
    ++pos;
    std::vector<int> cycle;
    while (true) {
      skip_ws();
      if (pos >= text.size()) throw std::invalid_argument("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!cycle.empty()) {
        if (text[pos] != ',') throw std::invalid_argument("expected ',' between cycle entries");
        ++pos;
        skip_ws();
      }
      size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == start) throw std::invalid_argument("expected a number in cycle notation");
      int v = std::stoi(text.substr(start, pos - start));
      if (v < 0 || v >= n) throw std::invalid_argument("cycle entry out of range");
      if (seen[v]) throw std::invalid_argument("element repeated in cycle notation");
      seen[v] = 1;
      cycle.push_back(v);
    }
    if (cycle.empty()) throw std::invalid_argument("empty cycle");
    for (size_t i = 0; i < cycle.size(); ++i)
      perm[cycle[i]] = cycle[(i + 1) % cycle.size()];
    skip_ws();
  }
  return perm;
}

long long permutation_order(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<char> done(n, 0);
  long long order = 1;
  for (int leader = 0; leader < n; ++leader) {
    if (done[leader]) continue;
    int len = 0, cur = leader;
    do {
      done[cur] = 1;
      cur = perm[cur];
      ++len;
    } while (cur != leader);
    order = std::lcm(order, static_cast<long long>(len));
  }
  return order;
}

std::string format_cycles(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<char> done(n, 0);
  std::string out;
  for (int leader = 0; leader < n; ++leader) {
    if (done[leader]) continue;
    out += '(';
    int cur = leader;
    bool first = true;
    do {
      if (!first) out += ',';
      out += std::to_string(cur);
      done[cur] = 1;
      cur = perm[cur];
      first = false;
    } while (cur != leader);
    out += ')';
  }
  return out;
}

}  // namespace skewmorph
