#include "heegaard/farey.hpp"

#include <cstdlib>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace heegaard {

Slope make_slope(long long p, long long q) {
  if (p == 0 && q == 0) throw std::invalid_argument("slope 0/0");
  if (q < 0) { p = -p; q = -q; }
  if (q == 0) return Slope{1, 0};
  long long g = std::gcd(p < 0 ? -p : p, q);
  return Slope{p / g, q / g};
}

Slope parse_slope(const std::string& s) {
  if (s == "inf") return Slope{1, 0};
  auto pos = s.find('/');
  try {
    if (pos == std::string::npos) return make_slope(std::stoll(s), 1);
    return make_slope(std::stoll(s.substr(0, pos)), std::stoll(s.substr(pos + 1)));
  } catch (const std::exception&) {
    throw std::invalid_argument("bad slope '" + s + "'");
  }
}

std::string format_slope(const Slope& s) {
  if (s.q == 0) return "inf";
  return std::to_string(s.p) + "/" + std::to_string(s.q);
}

bool farey_adjacent(const Slope& a, const Slope& b) {
  long long d = a.p * b.q - a.q * b.p;
  return d == 1 || d == -1;
}

namespace {

// Distance from infinity by continued-fraction steps: each step subtracts a
// nearby integer and inverts, strictly shrinking the denominator.
int dist_from_inf(long long p, long long q, std::map<std::pair<long long, long long>, int>& memo) {
  if (q == 0) return 0;
  if (q == 1 || q == -1) return 1;
  if (q < 0) { p = -p; q = -q; }
  auto key = std::make_pair(p, q);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  long long fl = p >= 0 ? p / q : -((-p + q - 1) / q);
  int best = -1;
  for (long long n : {fl, fl + 1}) {
    long long rp = -q, rq = p - n * q;  // -1/(p/q - n)
    if (rq == 0) { best = 1; break; }   // p/q adjacent to the integer n
    long long g = std::gcd(rp < 0 ? -rp : rp, rq < 0 ? -rq : rq);
    int d = 1 + dist_from_inf(rp / g, rq / g, memo);
    if (best < 0 || d < best) best = d;
  }
  memo[key] = best;
  return best;
}

}  // namespace

int farey_distance(const Slope& a, const Slope& b) {
  // Unimodular map sending a to infinity: rows (d,-c) and (-q,p) with
  // p*d - q*c = 1.
  long long p = a.p, q = a.q;
  long long c = 0, d = 0;
  // extended gcd for p*d - q*c = 1
  {
    long long old_r = p, r = q, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
      long long k = old_r / r;
      long long tmp;
      tmp = old_r - k * r; old_r = r; r = tmp;
      tmp = old_s - k * s; old_s = s; s = tmp;
      tmp = old_t - k * t; old_t = t; t = tmp;
    }
    // old_s * p + old_t * q = old_r = +-gcd = +-1
    if (old_r == -1) { old_s = -old_s; old_t = -old_t; }
    d = old_s;
    c = -old_t;
  }
  long long np = d * b.p - c * b.q;
  long long nq = -q * b.p + p * b.q;
  if (np == 0 && nq == 0) throw std::logic_error("degenerate slope image");
  long long g = std::gcd(np < 0 ? -np : np, nq < 0 ? -nq : nq);
  std::map<std::pair<long long, long long>, int> memo;
  return dist_from_inf(np / g, nq / g, memo);
}

std::optional<Slope> common_neighbor(const Slope& a, const Slope& b) {
  if (a == b) throw std::invalid_argument("common_neighbor needs distinct slopes");
  long long D = a.p * b.q - a.q * b.p;
  if (D == 0) return std::nullopt;
  std::vector<Slope> found;
  for (long long e1 : {1, -1})
    for (long long e2 : {1, -1}) {
      // q_a r - p_a s = e1, q_b r - p_b s = e2; Cramer with det = -D.
      long long rn = a.p * e2 - b.p * e1;
      long long sn = a.q * e2 - b.q * e1;
      if (rn % D || sn % D) continue;
      long long r = rn / D, s = sn / D;
      if (r == 0 && s == 0) continue;
      Slope cand = make_slope(r, s);
      if (cand == a || cand == b) continue;
      if (!farey_adjacent(cand, a) || !farey_adjacent(cand, b)) continue;
      bool dup = false;
      for (const Slope& f : found) dup = dup || f == cand;
      if (!dup) found.push_back(cand);
    }
  if (found.empty()) return std::nullopt;
  Slope best = found[0];
  for (const Slope& f : found)
    if (f < best) best = f;
  return best;
}

}  // namespace heegaard
