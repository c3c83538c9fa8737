#include "magmaforge/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "magmaforge/error.hpp"

namespace magmaforge {

Partition::Partition(int m) : labels_(m), blocks_(m) {
  std::iota(labels_.begin(), labels_.end(), 0);
}

Partition Partition::from_labels(std::vector<int> labels) {
  std::vector<int> rename;
  Partition p(0);
  p.labels_.resize(labels.size());
  for (std::size_t x = 0; x < labels.size(); ++x) {
    const int l = labels[x];
    if (l < 0) throw Error(Errc::DomainError, "negative block label");
    if (static_cast<std::size_t>(l) >= rename.size()) rename.resize(l + 1, -1);
    if (rename[l] < 0) rename[l] = p.blocks_++;
    p.labels_[x] = rename[l];
  }
  return p;
}

Partition Partition::from_blocks(int m, const std::vector<std::vector<Element>>& blocks) {
  std::vector<int> labels(m, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (Element x : blocks[b]) {
      if (x < 0 || x >= m || labels[x] >= 0) throw Error(Errc::DomainError, "blocks overlap or leave the universe");
      labels[x] = static_cast<int>(b);
    }
  }
  int fresh = static_cast<int>(blocks.size());
  for (int& l : labels) {
    if (l < 0) l = fresh++;
  }
  return from_labels(std::move(labels));
}

Partition Partition::total(int m) { return from_labels(std::vector<int>(m, 0)); }

std::vector<std::vector<Element>> Partition::blocks() const {
  std::vector<std::vector<Element>> out(blocks_);
  for (int x = 0; x < size(); ++x) out[labels_[x]].push_back(x);
  return out;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  for (const auto& b : blocks()) {
    os << '{';
    for (std::size_t i = 0; i < b.size(); ++i) os << (i ? " " : "") << b[i];
    os << '}';
  }
  return os.str();
}

bool Partition::refines(const Partition& coarser) const {
  std::vector<int> image(blocks_, -1);
  for (int x = 0; x < size(); ++x) {
    int& img = image[labels_[x]];
    if (img < 0)
      img = coarser.labels_[x];
    else if (img != coarser.labels_[x])
      return false;
  }
  return true;
}

Partition Partition::join(const Partition& a, const Partition& b) {
  const int m = a.size();
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  std::vector<int> first_a(a.blocks_, -1), first_b(b.blocks_, -1);
  for (int x = 0; x < m; ++x) {
    for (auto [first, label] : {std::pair{&first_a, a.labels_[x]}, std::pair{&first_b, b.labels_[x]}}) {
      int& f = (*first)[label];
      if (f < 0)
        f = x;
      else
        parent[find(x)] = find(f);
    }
  }
  std::vector<int> labels(m);
  for (int x = 0; x < m; ++x) labels[x] = find(x);
  return from_labels(std::move(labels));
}

Partition Partition::meet(const Partition& a, const Partition& b) {
  std::vector<int> labels(a.size());
  for (int x = 0; x < a.size(); ++x) labels[x] = a.labels_[x] * b.blocks_ + b.labels_[x];
  return from_labels(std::move(labels));
}

FiniteLattice::FiniteLattice(int size, const std::function<bool(int, int)>& leq)
    : n_(size), leq_(static_cast<std::size_t>(size) * size), join_(leq_.size()), meet_(leq_.size()) {
  if (size < 1) throw Error(Errc::NotALattice, "empty lattice");
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) leq_[a * n_ + b] = leq(a, b);
  }
  for (int a = 0; a < n_; ++a) {
    if (!leq_[a * n_ + a]) throw Error(Errc::NotALattice, "order is not reflexive");
    for (int b = 0; b < n_; ++b) {
      if (a != b && leq_[a * n_ + b] && leq_[b * n_ + a]) throw Error(Errc::NotALattice, "order is not antisymmetric");
      for (int c = 0; c < n_; ++c) {
        if (leq_[a * n_ + b] && leq_[b * n_ + c] && !leq_[a * n_ + c])
          throw Error(Errc::NotALattice, "order is not transitive");
      }
    }
  }
  auto bound = [&](int a, int b, bool upper) {
    int best = -1;
    for (int c = 0; c < n_; ++c) {
      const bool ok = upper ? (leq(a, c) && leq(b, c)) : (leq(c, a) && leq(c, b));
      if (!ok) continue;
      if (best < 0 || (upper ? this->leq(c, best) : this->leq(best, c))) best = c;
    }
    if (best < 0) throw Error(Errc::NotALattice, "no bound for a pair");
    for (int c = 0; c < n_; ++c) {
      const bool ok = upper ? (this->leq(a, c) && this->leq(b, c)) : (this->leq(c, a) && this->leq(c, b));
      if (ok && !(upper ? this->leq(best, c) : this->leq(c, best)))
        throw Error(Errc::NotALattice, "pair has no least upper or greatest lower bound");
    }
    return best;
  };
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      join_[a * n_ + b] = bound(a, b, true);
      meet_[a * n_ + b] = bound(a, b, false);
    }
  }
  bottom_ = 0;
  top_ = 0;
  for (int a = 1; a < n_; ++a) {
    bottom_ = meet(bottom_, a);
    top_ = join(top_, a);
  }
}

bool lattice_isomorphic(const FiniteLattice& a, const FiniteLattice& b, const Limits& lim) {
  const int n = a.size();
  if (n != b.size()) return false;
  auto degrees = [](const FiniteLattice& l, int x) {
    int below = 0, above = 0;
    for (int y = 0; y < l.size(); ++y) {
      below += l.leq(y, x);
      above += l.leq(x, y);
    }
    return std::pair{below, above};
  };
  std::vector<std::pair<int, int>> da(n), db(n);
  for (int x = 0; x < n; ++x) {
    da[x] = degrees(a, x);
    db[x] = degrees(b, x);
  }
  {
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);
  std::uint64_t nodes = 0;
  std::function<bool(int)> rec = [&](int x) {
    if (x == n) return true;
    if (++nodes > lim.search_nodes) throw Error(Errc::CapExceeded, "lattice isomorphism search node cap");
    for (int y = 0; y < n; ++y) {
      if (used[y] || da[x] != db[y]) continue;
      bool ok = true;
      for (int z = 0; z < x && ok; ++z) {
        ok = a.leq(z, x) == b.leq(map[z], y) && a.leq(x, z) == b.leq(y, map[z]);
      }
      if (!ok) continue;
      map[x] = y;
      used[y] = 1;
      if (rec(x + 1)) return true;
      used[y] = 0;
    }
    map[x] = -1;
    return false;
  };
  return rec(0);
}

bool is_distributive(const FiniteLattice& l) {
  const int n = l.size();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z))) return false;
      }
    }
  }
  return true;
}

}  // namespace magmaforge
