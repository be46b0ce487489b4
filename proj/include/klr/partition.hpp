#pragma once

#include "klr/cartan.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace klr {

/// Box of a Young diagram, 1-based.
struct Node {
  int row = 1;
  int col = 1;
  friend bool operator==(const Node&, const Node&) = default;
  friend auto operator<=>(const Node&, const Node&) = default;
  std::string to_string() const;
};

class Partition {
public:
  Partition() = default;
  /// Throws DomainError unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// mu_r with mu_r = 0 beyond the last row.
  int part(int row) const;
  bool contains(const Node& n) const;

  /// Nodes row by row, left to right.
  std::vector<Node> nodes() const;
  std::vector<Node> addable_nodes() const;
  std::vector<Node> removable_nodes() const;
  bool is_addable(const Node& n) const;
  bool is_removable(const Node& n) const;
  Partition add(const Node& n) const;
  Partition remove(const Node& n) const;

  Partition transpose() const;

  /// "3,2,2,1"; the empty partition renders as "".
  std::string to_string() const;
  /// Compact form "3^2,1^3".
  std::string to_exp_string() const;
  /// Accepts "3,2,2,1", "3^2,1^3", "" and "0".
  static Partition parse(const std::string& text);
  /// Rebuilds from arbitrary nonnegative row lengths; nullopt if they do not
  /// form a partition after trailing zeros are stripped.
  static std::optional<Partition> from_rows(std::vector<int> rows);

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

private:
  std::vector<int> parts_;
};

int residue(const Arith& a, const Node& n);
bool is_restricted(const Arith& a, const Partition& mu);
ContentVector content(const Arith& a, const Partition& mu);

std::vector<Node> addable_nodes(const Arith& a, const Partition& mu, int i);
std::vector<Node> removable_nodes(const Arith& a, const Partition& mu, int i);

/// Rim nodes in reading order, bottom-left to top-right.
std::vector<Node> rim(const Partition& mu);
/// The p-segments of the p-rim.  Throws DomainError on the empty partition.
std::vector<std::vector<Node>> p_segments(const Arith& a, const Partition& mu);

std::vector<Partition> partitions_of(int n);
std::vector<Partition> restricted_partitions_of(const Arith& a, int n);

}  // namespace klr
