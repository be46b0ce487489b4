#include "klr/partition.hpp"

#include "klr/error.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>

namespace klr {

std::string Node::to_string() const {
  return "(" + std::to_string(row) + "," + std::to_string(col) + ")";
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] <= 0) throw DomainError("partition parts must be positive", to_string());
    if (k > 0 && parts_[k] > parts_[k - 1])
      throw DomainError("partition parts must be weakly decreasing", to_string());
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int row) const {
  if (row < 1 || row > length()) return 0;
  return parts_[static_cast<std::size_t>(row - 1)];
}

bool Partition::contains(const Node& n) const {
  return n.row >= 1 && n.col >= 1 && n.col <= part(n.row);
}

std::vector<Node> Partition::nodes() const {
  std::vector<Node> out;
  for (int r = 1; r <= length(); ++r)
    for (int c = 1; c <= part(r); ++c) out.push_back({r, c});
  return out;
}

std::vector<Node> Partition::addable_nodes() const {
  std::vector<Node> out;
  for (int r = length() + 1; r >= 1; --r) {
    int c = part(r) + 1;
    if (r == 1 || part(r - 1) >= c) out.push_back({r, c});
  }
  return out;
}

std::vector<Node> Partition::removable_nodes() const {
  std::vector<Node> out;
  for (int r = length(); r >= 1; --r)
    if (part(r) > part(r + 1)) out.push_back({r, part(r)});
  return out;
}

bool Partition::is_addable(const Node& n) const {
  return n.row >= 1 && n.col == part(n.row) + 1 && (n.row == 1 || part(n.row - 1) >= n.col);
}

bool Partition::is_removable(const Node& n) const {
  return n.row >= 1 && n.row <= length() && n.col == part(n.row) && part(n.row + 1) < n.col;
}

Partition Partition::add(const Node& n) const {
  if (!is_addable(n)) throw DomainError("node must be addable", n.to_string() + " to " + to_string());
  auto p = parts_;
  if (n.row > length())
    p.push_back(1);
  else
    ++p[static_cast<std::size_t>(n.row - 1)];
  return Partition(std::move(p));
}

Partition Partition::remove(const Node& n) const {
  if (!is_removable(n)) throw DomainError("node must be removable", n.to_string() + " from " + to_string());
  auto p = parts_;
  if (--p[static_cast<std::size_t>(n.row - 1)] == 0) p.pop_back();
  return Partition(std::move(p));
}

Partition Partition::transpose() const {
  std::vector<int> t;
  for (int c = 1; c <= part(1); ++c) {
    int len = 0;
    while (part(len + 1) >= c) ++len;
    t.push_back(len);
  }
  return Partition(std::move(t));
}

std::string Partition::to_string() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < parts_.size(); ++k) os << (k ? "," : "") << parts_[k];
  return os.str();
}

std::string Partition::to_exp_string() const {
  std::ostringstream os;
  std::size_t k = 0;
  bool first = true;
  while (k < parts_.size()) {
    std::size_t e = k;
    while (e < parts_.size() && parts_[e] == parts_[k]) ++e;
    os << (first ? "" : ",") << parts_[k];
    if (e - k > 1) os << "^" << (e - k);
    first = false;
    k = e;
  }
  return os.str();
}

Partition Partition::parse(const std::string& text) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t.empty() || t == "0") return Partition();
  std::vector<int> parts;
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto caret = item.find('^');
    int value = 0, mult = 1;
    try {
      std::size_t used = 0;
      value = std::stoi(item.substr(0, caret), &used);
      if (used != (caret == std::string::npos ? item.size() : caret)) throw std::invalid_argument("trailing");
      if (caret != std::string::npos) {
        mult = std::stoi(item.substr(caret + 1), &used);
        if (used != item.size() - caret - 1) throw std::invalid_argument("trailing");
      }
    } catch (const std::exception&) {
      throw DomainError("partition must be a list like 3,2,2,1 or 3^2,1", text);
    }
    if (mult < 0) throw DomainError("exponent must be nonnegative", text);
    for (int k = 0; k < mult; ++k) parts.push_back(value);
  }
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  try {
    return Partition(std::move(parts));
  } catch (const DomainError& e) {
    throw DomainError(e.precondition(), text);
  }
}

std::optional<Partition> Partition::from_rows(std::vector<int> rows) {
  while (!rows.empty() && rows.back() == 0) rows.pop_back();
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (rows[k] <= 0) return std::nullopt;
    if (k > 0 && rows[k] > rows[k - 1]) return std::nullopt;
  }
  return Partition(std::move(rows));
}

int residue(const Arith& a, const Node& n) { return a.residue(n.col - n.row); }

bool is_restricted(const Arith& a, const Partition& mu) {
  for (int r = 1; r <= mu.length(); ++r)
    if (mu.part(r) - mu.part(r + 1) >= a.p()) return false;
  return true;
}

ContentVector content(const Arith& a, const Partition& mu) {
  ContentVector c(a.p());
  for (const Node& n : mu.nodes()) ++c[residue(a, n)];
  return c;
}

namespace {

std::vector<Node> filter_residue(const Arith& a, std::vector<Node> nodes, int i) {
  std::erase_if(nodes, [&](const Node& n) { return residue(a, n) != a.residue(i); });
  return nodes;
}

}  // namespace

std::vector<Node> addable_nodes(const Arith& a, const Partition& mu, int i) {
  return filter_residue(a, mu.addable_nodes(), i);
}

std::vector<Node> removable_nodes(const Arith& a, const Partition& mu, int i) {
  return filter_residue(a, mu.removable_nodes(), i);
}

std::vector<Node> rim(const Partition& mu) {
  std::vector<Node> out;
  for (int r = mu.length(); r >= 1; --r)
    for (int c = std::max(1, mu.part(r + 1)); c <= mu.part(r); ++c) out.push_back({r, c});
  return out;
}

std::vector<std::vector<Node>> p_segments(const Arith& a, const Partition& mu) {
  if (mu.empty()) throw DomainError("p-segments need a nonempty partition", "()");
  const auto path = rim(mu);
  std::vector<std::vector<Node>> segs;
  int min_col = 1;
  std::size_t k = 0;
  while (true) {
    while (k < path.size() && path[k].col < min_col) ++k;
    if (k == path.size()) break;
    std::vector<Node> seg;
    while (k < path.size() && static_cast<int>(seg.size()) < a.p()) seg.push_back(path[k++]);
    int right = 0;
    for (const Node& n : seg) right = std::max(right, n.col);
    segs.push_back(std::move(seg));
    min_col = right + 1;
  }
  return segs;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int max_part) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int k = std::min(left, max_part); k >= 1; --k) {
      cur.push_back(k);
      rec(left - k, k);
      cur.pop_back();
    }
  };
  if (n >= 0) rec(n, n);
  return out;
}

std::vector<Partition> restricted_partitions_of(const Arith& a, int n) {
  auto all = partitions_of(n);
  std::erase_if(all, [&](const Partition& mu) { return !is_restricted(a, mu); });
  return all;
}

}  // namespace klr
