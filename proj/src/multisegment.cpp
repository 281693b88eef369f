#include "zelpack/multisegment.hpp"

#include <algorithm>
#include <deque>

#include "zelpack/support.hpp"

namespace zelpack {

Multisegment::Multisegment(std::vector<Segment> segs) : segs_(std::move(segs)) {
  for (std::size_t i = 1; i < segs_.size(); ++i)
    if (!same_coset(segs_[i].b, segs_[0].b))
      throw MultiCosetSupport("multisegment endpoints span more than one Z-coset");
  std::sort(segs_.begin(), segs_.end(), [](const Segment& x, const Segment& y) {
    if (x.b != y.b) return y.b < x.b;
    return y.e < x.e;
  });
}

std::string Multisegment::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < segs_.size(); ++i) {
    if (i) out += ",";
    out += segs_[i].str();
  }
  return out + "}";
}

MultisegmentStats stats(const Multisegment& a) {
  MultisegmentStats st;
  st.count = static_cast<int>(a.size());
  if (a.empty()) return st;
  const auto& segs = a.segments();
  for (const auto& s : segs) st.longest = std::max(st.longest, s.length());
  // canonical order is descending in b, so iterate reversed for an ascending
  // sweep; runs merge when the next base touches reach + 1
  HalfInt reach = segs.back().e;
  st.cover = 1;
  for (auto it = std::next(segs.rbegin()); it != segs.rend(); ++it) {
    if (it->b > reach + 1) {
      ++st.cover;
      reach = it->e;
    } else {
      reach = std::max(reach, it->e);
    }
  }
  return st;
}

std::set<Multisegment> elementary_successors(const Multisegment& a) {
  std::set<Multisegment> out;
  const auto& segs = a.segments();
  for (std::size_t i = 0; i < segs.size(); ++i) {
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      const Segment &d1 = segs[i], &d2 = segs[j];
      std::vector<Segment> repl;
      if (intersection(d1, d2)) {
        // nested or equal pairs admit no operation
        if (d1.contains(d2) || d2.contains(d1)) continue;
        repl.push_back(*merged(d1, d2));
        repl.push_back(*intersection(d1, d2));
      } else if (auto uni = merged(d1, d2)) {
        repl.push_back(*uni);
      } else {
        continue;
      }
      std::vector<Segment> next;
      next.reserve(segs.size());
      for (std::size_t t = 0; t < segs.size(); ++t)
        if (t != i && t != j) next.push_back(segs[t]);
      next.insert(next.end(), repl.begin(), repl.end());
      out.insert(Multisegment(std::move(next)));
    }
  }
  return out;
}

bool leq_oracle(const Multisegment& a, const Multisegment& b) {
  if (support_of(a) != support_of(b))
    throw SupportMismatch("leq_oracle: operands do not share a support");
  if (a == b) return true;
  // BFS; terminates because every operation strictly increases sum(len^2)
  std::set<Multisegment> seen{a};
  std::deque<Multisegment> todo{a};
  while (!todo.empty()) {
    Multisegment cur = std::move(todo.front());
    todo.pop_front();
    for (auto& nxt : elementary_successors(cur)) {
      if (nxt == b) return true;
      if (seen.insert(nxt).second) todo.push_back(nxt);
    }
  }
  return false;
}

std::set<Multisegment> upper_set(const Multisegment& a) {
  std::set<Multisegment> seen{a};
  std::deque<Multisegment> todo{a};
  while (!todo.empty()) {
    Multisegment cur = std::move(todo.front());
    todo.pop_front();
    for (auto& nxt : elementary_successors(cur))
      if (seen.insert(nxt).second) todo.push_back(nxt);
  }
  return seen;
}

Multisegment mw_dual(const Multisegment& a) {
  std::vector<Segment> work(a.segments());
  std::vector<Segment> dual;
  while (!work.empty()) {
    HalfInt end = work[0].e;
    for (const auto& s : work) end = std::max(end, s.e);
    // descend: start from the largest base at the top end, then repeatedly
    // the largest base among predecessors one step down
    std::vector<std::size_t> chain;
    std::size_t best = work.size();
    for (std::size_t i = 0; i < work.size(); ++i)
      if (work[i].e == end && (best == work.size() || work[best].b < work[i].b)) best = i;
    chain.push_back(best);
    HalfInt m = end;
    for (;;) {
      const Segment& prev = work[chain.back()];
      best = work.size();
      for (std::size_t i = 0; i < work.size(); ++i) {
        if (work[i].e != m - 1 || !precedes(work[i], prev)) continue;
        if (best == work.size() || work[best].b < work[i].b) best = i;
      }
      if (best == work.size()) break;
      chain.push_back(best);
      m = m - 1;
    }
    dual.emplace_back(m, end);
    // shorten each chosen segment by its end value
    std::vector<char> chosen(work.size(), 0);
    for (auto idx : chain) chosen[idx] = 1;
    std::vector<Segment> next;
    next.reserve(work.size());
    for (std::size_t i = 0; i < work.size(); ++i) {
      if (!chosen[i]) {
        next.push_back(work[i]);
      } else if (work[i].b < work[i].e) {
        next.emplace_back(work[i].b, work[i].e - 1);
      }
    }
    work = std::move(next);
  }
  return Multisegment(std::move(dual));
}

bool is_simple(const Multisegment& a) {
  const auto& segs = a.segments();
  if (segs.empty()) return false;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    if (segs[i].length() != segs[0].length()) return false;
    if (i && segs[i].b + 1 != segs[i - 1].b) return false;
  }
  return true;
}

static void check_simple_params(HalfInt b, HalfInt e, int n) {
  if (n < 1) throw Error("simple multisegment needs n >= 1");
  if (!same_coset(b, e) || e < b)
    throw BadSegment("simple multisegment needs e - b to be a nonnegative integer");
}

Multisegment simple_multisegment(HalfInt b, HalfInt e, int n) {
  check_simple_params(b, e, n);
  std::vector<Segment> segs;
  segs.reserve(n);
  for (int t = 0; t < n; ++t) segs.emplace_back(b + t, e + t);
  return Multisegment(std::move(segs));
}

Multisegment simple_dual_formula(HalfInt b, HalfInt e, int n) {
  check_simple_params(b, e, n);
  std::vector<Segment> segs;
  for (int k = 0; k <= steps(e, b); ++k) segs.emplace_back(e - k, e + (n - 1 - k));
  return Multisegment(std::move(segs));
}

}  // namespace zelpack
