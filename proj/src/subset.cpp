#include "thetalgr/subset.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "thetalgr/error.hpp"

namespace thetalgr {

Subset::Subset(std::initializer_list<int> elems) : Subset(std::vector<int>(elems)) {}

Subset::Subset(std::vector<int> elems) : elems_(std::move(elems)) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  if (!elems_.empty() && elems_.front() < 1) {
    throw_domain("subset elements must be positive");
  }
}

Subset Subset::interval(int lo, int hi) {
  std::vector<int> v;
  for (int i = lo; i <= hi; ++i) v.push_back(i);
  return Subset(std::move(v));
}

bool Subset::contains(int x) const {
  return std::binary_search(elems_.begin(), elems_.end(), x);
}

int Subset::count_at_most(int j) const {
  return static_cast<int>(std::upper_bound(elems_.begin(), elems_.end(), j) -
                          elems_.begin());
}

Subset Subset::complement(int n) const {
  std::vector<int> v;
  for (int i = 1; i <= n; ++i) {
    if (!contains(i)) v.push_back(i);
  }
  return Subset(std::move(v));
}

int Subset::sum() const { return std::accumulate(elems_.begin(), elems_.end(), 0); }

Subset Subset::with(int x) const {
  auto v = elems_;
  v.push_back(x);
  return Subset(std::move(v));
}

Subset Subset::without(int x) const {
  auto v = elems_;
  v.erase(std::remove(v.begin(), v.end(), x), v.end());
  return Subset(std::move(v));
}

std::string Subset::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (i) out << ',';
    out << elems_[i];
  }
  return out.str();
}

Subset Subset::parse(const std::string& text) {
  std::vector<int> v;
  if (text.empty()) return Subset();
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const std::string item =
        text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      throw_parse("malformed index set '" + text + "'");
    }
    v.push_back(std::stoi(item));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return Subset(std::move(v));
}

std::vector<Subset> all_subsets(int n) {
  std::vector<Subset> out;
  out.reserve(std::size_t{1} << n);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> v;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) v.push_back(i + 1);
    }
    out.emplace_back(std::move(v));
  }
  return out;
}

}  // namespace thetalgr
