#include "lsft/diagram.hpp"

#include "lsft/simplex.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <istream>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace lsft {
namespace {

[[noreturn]] void fail(const std::string& m) { throw DiagramError(m); }

void require(bool ok, const std::string& m) {
  if (!ok) fail(m);
}

// ---------------------------------------------------------------------------
// Text helpers.

std::string strip(std::string s) {
  auto issp = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  while (!s.empty() && issp(s.front())) s.erase(s.begin());
  while (!s.empty() && issp(s.back())) s.pop_back();
  return s;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(strip(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(strip(cur));
  return out;
}

int parse_int(const std::string& t, const std::string& what) {
  require(!t.empty(), "missing integer in " + what);
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(t, &used);
  } catch (...) {
    fail("bad integer '" + t + "' in " + what);
  }
  require(used == t.size(), "bad integer '" + t + "' in " + what);
  return v;
}

std::vector<int> parse_int_list(const std::string& v, const std::string& what) {
  std::vector<int> out;
  for (const auto& t : split(v, ',')) out.push_back(parse_int(t, what));
  return out;
}

FrontWord parse_front_value(const std::string& v) {
  FrontWord fw;
  for (auto tok : split(v, ',')) {
    require(!tok.empty(), "empty event in front:");
    char k = static_cast<char>(std::toupper(static_cast<unsigned char>(tok[0])));
    require(k == 'L' || k == 'R' || k == 'X', "unknown front event '" + tok + "'");
    int level = 0;
    std::string rest = strip(tok.substr(1));
    if (!rest.empty()) {
      require(rest.front() == '(' && rest.back() == ')', "bad front event '" + tok + "'");
      level = parse_int(strip(rest.substr(1, rest.size() - 2)), "front:");
      require(level >= 1, "front event level must be positive");
    }
    fw.events.push_back({k, level});
  }
  return fw;
}

std::vector<PdTuple> parse_pd_value(const std::string& v) {
  std::vector<PdTuple> out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < v.size() && (std::isspace(static_cast<unsigned char>(v[i])) || v[i] == ',')) ++i;
  };
  skip();
  while (i < v.size()) {
    require(std::toupper(static_cast<unsigned char>(v[i])) == 'X', "pd: expected X(a,b,c,d)");
    ++i;
    skip();
    require(i < v.size() && v[i] == '(', "pd: expected '(' after X");
    auto close = v.find(')', i);
    require(close != std::string::npos, "pd: missing ')'");
    auto nums = parse_int_list(v.substr(i + 1, close - i - 1), "pd:");
    require(nums.size() == 4, "pd: a crossing needs four arc labels");
    PdTuple t;
    std::copy(nums.begin(), nums.end(), t.a.begin());
    out.push_back(t);
    i = close + 1;
    skip();
  }
  require(!out.empty(), "pd: no crossings");
  return out;
}

// ---------------------------------------------------------------------------
// Exact planar helpers.

Pt sub(const Pt& a, const Pt& b) { return {a.x - b.x, a.y - b.y}; }
Pt neg(const Pt& p) { return {-p.x, -p.y}; }
Rat cross2(const Pt& a, const Pt& b) { return a.x * b.y - a.y * b.x; }
Rat dot2(const Pt& a, const Pt& b) { return a.x * b.x + a.y * b.y; }

// Half-plane of a direction: angle in [0,pi) vs [pi,2pi).
bool upper_half(const Pt& d) {
  return sgn(d.y) > 0 || (sgn(d.y) == 0 && sgn(d.x) > 0);
}

// Signed half turns picked up moving from direction d to d2 (|turn| < pi): the
// count changes exactly when the half-plane flips, by the turn's sign.
int half_turn_step(const Pt& d, const Pt& d2, const char* ctx) {
  Rat cr = cross2(d, d2);
  if (sgn(cr) == 0) {
    require(sgn(dot2(d, d2)) > 0, std::string("degenerate turn in ") + ctx);
    return 0;
  }
  return upper_half(d) != upper_half(d2) ? sgn(cr) : 0;
}

// floor(total tangent turn / pi) along a direction sequence.
int floor_half_turns(const std::vector<Pt>& dirs, const char* ctx) {
  int a = 0;
  for (std::size_t i = 0; i + 1 < dirs.size(); ++i) a += half_turn_step(dirs[i], dirs[i + 1], ctx);
  const Pt rs = upper_half(dirs.front()) ? dirs.front() : neg(dirs.front());
  const Pt re = upper_half(dirs.back()) ? dirs.back() : neg(dirs.back());
  return a + (sgn(cross2(rs, re)) >= 0 ? 0 : -1);
}

// ---------------------------------------------------------------------------
// Stage one: a traversal skeleton (visits, signs, optional exact layout).

struct Layout {
  std::vector<Pt> pts;                       // closed polyline of the knot
  std::vector<int> visit_vertex;             // per traversal position
  std::vector<std::pair<int, int>> mevents;  // Maslov potential steps (vertex, +-1)
};

struct Skeleton {
  int n = 0;
  std::vector<int> vis_chord;  // provisional ids, 0-based
  std::vector<char> vis_over;
  std::vector<int> sign;  // per provisional id
  std::optional<Layout> layout;
};

// Resolve a front word into the skeleton: strands are swept left to right;
// a right cusp resolves into a small loop whose crossing is passed first on
// the arriving branch (so the arriving-on-upper passage is the overcrossing),
// and a plain crossing puts the descending strand on top.
Skeleton sweep_front(const FrontWord& fw) {
  require(!fw.events.empty(), "front: no events");

  struct Strand {
    std::vector<Pt> pts;                     // drawn left to right
    std::vector<std::pair<int, int>> marks;  // (point index, crossing id)
    int birth = -1, death = -1;
  };
  struct Join {
    bool death = false;
    int low = -1, up = -1;
    Pt v, d_bot, d_right, d_top;
    int crossing = -1;
  };
  struct Cross {
    bool cusp = false;
    int over = -1, under = -1;  // strands, plain crossings only
  };

  std::vector<Strand> strands;
  std::vector<Join> joins;
  std::vector<Cross> crossings;
  std::vector<int> active;  // strand ids, bottom to top

  for (std::size_t e = 0; e < fw.events.size(); ++e) {
    const FrontEvent ev = fw.events[e];
    const int cnt = static_cast<int>(active.size());
    const Rat x1 = Rat(static_cast<int>(e)) + 1;
    const Rat xm = Rat(static_cast<int>(e)) + Rat(1, 2);
    if (ev.kind == 'L') {
      const int lev = ev.level ? ev.level : cnt + 1;
      require(1 <= lev && lev <= cnt + 1, "left cusp level out of range");
      for (int i = 0; i < cnt; ++i)
        strands[active[i]].pts.push_back({x1, Rat(i + 1 < lev ? i + 1 : i + 3)});
      const Pt v{xm, Rat(lev) + Rat(1, 2)};
      const int lo = static_cast<int>(strands.size());
      const int jid = static_cast<int>(joins.size());
      strands.push_back({{v, {x1, Rat(lev)}}, {}, jid, -1});
      strands.push_back({{v, {x1, Rat(lev + 1)}}, {}, jid, -1});
      joins.push_back({false, lo, lo + 1, v, {}, {}, {}, -1});
      active.insert(active.begin() + (lev - 1), {lo, lo + 1});
    } else if (ev.kind == 'X') {
      require(ev.level >= 1, "crossing event needs a level");
      require(ev.level + 1 <= cnt, "crossing level out of range");
      const int lev = ev.level;
      const int a = active[lev - 1], b = active[lev];
      const Pt p{xm, Rat(lev) + Rat(1, 2)};
      const int cid = static_cast<int>(crossings.size());
      crossings.push_back({false, b, a});  // the descending strand crosses over
      for (int i = 0; i < cnt; ++i) {
        if (i == lev - 1 || i == lev) continue;
        strands[active[i]].pts.push_back({x1, Rat(i + 1)});
      }
      auto pass = [&](int s, int to) {
        strands[s].pts.push_back(p);
        strands[s].marks.push_back({static_cast<int>(strands[s].pts.size()) - 1, cid});
        strands[s].pts.push_back({x1, Rat(to)});
      };
      pass(a, lev + 1);
      pass(b, lev);
      std::swap(active[lev - 1], active[lev]);
    } else {  // 'R'
      require(cnt >= 2, "right cusp with fewer than two strands");
      const int lev = ev.level ? ev.level : cnt - 1;
      require(1 <= lev && lev + 1 <= cnt, "right cusp level out of range");
      const int lo = active[lev - 1], up = active[lev];
      const Rat m = Rat(lev) + Rat(1, 2);
      const Rat x0 = Rat(static_cast<int>(e));
      const int cid = static_cast<int>(crossings.size());
      crossings.push_back({true, -1, -1});
      const int jid = static_cast<int>(joins.size());
      joins.push_back({true, lo, up, {xm, m},
                       {x0 + Rat(3, 4), m - Rat(1, 4)},
                       {x0 + Rat(7, 8), m},
                       {x0 + Rat(3, 4), m + Rat(1, 4)},
                       cid});
      strands[lo].death = strands[up].death = jid;
      strands[lo].pts.push_back({xm, m});
      strands[up].pts.push_back({xm, m});
      for (int i = 0; i < cnt; ++i) {
        if (i == lev - 1 || i == lev) continue;
        strands[active[i]].pts.push_back({x1, Rat(i + 1 < lev ? i + 1 : i - 1)});
      }
      active.erase(active.begin() + (lev - 1), active.begin() + (lev + 1));
    }
  }
  require(active.empty(), "front does not close up");

  // Walk the knot: start at the first left cusp, leaving along its upper
  // branch; the base point sits on the arc entering that cusp.
  const Join& j0 = joins[0];
  Layout la;
  Skeleton sk;
  la.pts.push_back(j0.v);
  std::vector<char> seen(strands.size(), 0);
  std::vector<int> over_vertex(crossings.size(), -1), under_vertex(crossings.size(), -1);
  auto add_visit = [&](int cid, bool over, int vertex) {
    sk.vis_chord.push_back(cid);
    sk.vis_over.push_back(over ? 1 : 0);
    la.visit_vertex.push_back(vertex);
    int& slot = over ? over_vertex[cid] : under_vertex[cid];
    require(slot == -1, "internal: crossing passage repeated");
    slot = vertex;
  };
  int s = j0.up;
  bool east = true;
  while (true) {
    require(!seen[s], "internal: strand revisited");
    seen[s] = 1;
    Strand& st = strands[s];
    if (east) {
      const int b0 = static_cast<int>(la.pts.size()) - 1;  // index of st.pts[0]
      for (std::size_t k = 1; k < st.pts.size(); ++k) la.pts.push_back(st.pts[k]);
      for (auto [pk, cid] : st.marks) add_visit(cid, crossings[cid].over == s, b0 + pk);
      const Join& j = joins[st.death];
      const bool from_up = (s == j.up);
      add_visit(j.crossing, from_up, static_cast<int>(la.pts.size()) - 1);
      la.pts.push_back(from_up ? j.d_bot : j.d_top);
      la.pts.push_back(j.d_right);
      la.mevents.push_back({static_cast<int>(la.pts.size()) - 1, from_up ? -1 : +1});
      la.pts.push_back(from_up ? j.d_top : j.d_bot);
      la.pts.push_back(j.v);
      add_visit(j.crossing, !from_up, static_cast<int>(la.pts.size()) - 1);
      s = from_up ? j.low : j.up;
      east = false;
    } else {
      const int b1 = static_cast<int>(la.pts.size()) - 1;  // index of st.pts.back()
      const int sz = static_cast<int>(st.pts.size());
      const bool closing = (st.birth == 0);
      for (int k = sz - 2; k >= (closing ? 1 : 0); --k) la.pts.push_back(st.pts[k]);
      for (auto it = st.marks.rbegin(); it != st.marks.rend(); ++it)
        add_visit(it->second, crossings[it->second].over == s, b1 + (sz - 1 - it->first));
      const Join& j = joins[st.birth];
      const bool from_up = (s == j.up);
      la.mevents.push_back({closing ? 0 : static_cast<int>(la.pts.size()) - 1, from_up ? -1 : +1});
      if (closing) break;
      s = from_up ? j.low : j.up;
      east = true;
    }
  }
  for (std::size_t i = 0; i < strands.size(); ++i)
    require(seen[i], "the diagram has more than one component");

  sk.n = static_cast<int>(crossings.size());
  require(static_cast<int>(sk.vis_chord.size()) == 2 * sk.n, "internal: traversal size");

  // Crossing signs from the exact tangents of the two passages.
  const int nv = static_cast<int>(la.pts.size());
  std::vector<Pt> dir(nv);
  for (int i = 0; i < nv; ++i) {
    dir[i] = sub(la.pts[(i + 1) % nv], la.pts[i]);
    require(sgn(dir[i].x) != 0 || sgn(dir[i].y) != 0, "internal: zero layout edge");
  }
  auto in_dir = [&](int v) { return dir[(v - 1 + nv) % nv]; };
  sk.sign.resize(sk.n);
  for (int c = 0; c < sk.n; ++c) {
    const int vo = over_vertex[c], vu = under_vertex[c];
    require(vo >= 0 && vu >= 0, "internal: missing passage");
    for (int v : {vo, vu})
      require(sgn(cross2(in_dir(v), dir[v])) == 0 && sgn(dot2(in_dir(v), dir[v])) > 0,
              "internal: bent crossing passage");
    const Rat det = cross2(in_dir(vo), in_dir(vu));
    require(sgn(det) != 0, "internal: tangential crossing");
    sk.sign[c] = sgn(det);
  }
  sk.layout = std::move(la);
  return sk;
}

// Read a pd code into the skeleton. Arcs are numbered 1..2n along the
// traversal with the base point on arc 1, so the under-out arc is always the
// successor of the under-in arc, and likewise for the over strand; which of
// b, d is the over-out arc decides the crossing sign.
Skeleton read_pd(const PdCode& pd) {
  const int n = static_cast<int>(pd.tuples.size());
  const int nn = 2 * n;
  std::vector<int> cnt(nn + 1, 0);
  for (const auto& t : pd.tuples)
    for (int x : t.a) {
      require(1 <= x && x <= nn, "pd: arc label out of range");
      ++cnt[x];
    }
  for (int x = 1; x <= nn; ++x)
    require(cnt[x] == 2, "pd: arc " + std::to_string(x) + " must appear exactly twice");

  auto succ = [nn](int a) { return a % nn + 1; };
  Skeleton sk;
  sk.n = n;
  sk.sign.resize(n);
  std::vector<int> over_in(n), under_in(n);
  for (int i = 0; i < n; ++i) {
    const auto& t = pd.tuples[i].a;
    require(t[2] == succ(t[0]), "pd: under-arcs of a crossing must be consecutive");
    const bool pos = (t[1] == succ(t[3]));
    const bool neg = (t[3] == succ(t[1]));
    require(pos || neg, "pd: over-arcs of a crossing must be consecutive");
    require(!(pos && neg), "pd: ambiguous single-crossing code; use a front or grid input");
    sk.sign[i] = pos ? 1 : -1;
    over_in[i] = pos ? t[3] : t[1];
    under_in[i] = t[0];
  }
  for (int v = 1; v <= nn; ++v) {
    int cid = -1;
    bool over = false;
    for (int i = 0; i < n; ++i) {
      if (under_in[i] == v) {
        require(cid == -1, "pd: arc " + std::to_string(v) + " enters two crossings");
        cid = i;
        over = false;
      }
      if (over_in[i] == v) {
        require(cid == -1, "pd: arc " + std::to_string(v) + " enters two crossings");
        cid = i;
        over = true;
      }
    }
    require(cid >= 0, "pd: arc " + std::to_string(v) + " enters no crossing");
    sk.vis_chord.push_back(cid);
    sk.vis_over.push_back(over ? 1 : 0);
  }
  return sk;
}

}  // namespace

// ---------------------------------------------------------------------------
// Stage two: assemble the diagram (labels, rotation system, faces, geometry,
// gradings).

struct DiagramBuilder {
  static Diagram assemble(Skeleton sk, const ParsedInput& in, const DiagramOptions& opt);
};

Diagram DiagramBuilder::assemble(Skeleton sk, const ParsedInput& in, const DiagramOptions& opt) {
  const int n = sk.n;
  const int nn = 2 * n;
  Diagram d;
  d.n_ = n;

  // Base point: move it to the requested arc, then renumber from it.
  int shift = 0;
  const std::optional<int> bp = opt.base_point ? opt.base_point : in.basepoint;
  if (bp) {
    require(0 <= *bp && *bp < nn,
            "base-point arc out of range (0.." + std::to_string(nn - 1) + ")");
    shift = (*bp + 1) % nn;
  }
  if (shift) {
    std::rotate(sk.vis_chord.begin(), sk.vis_chord.begin() + shift, sk.vis_chord.end());
    std::rotate(sk.vis_over.begin(), sk.vis_over.begin() + shift, sk.vis_over.end());
    if (sk.layout)
      std::rotate(sk.layout->visit_vertex.begin(), sk.layout->visit_vertex.begin() + shift,
                  sk.layout->visit_vertex.end());
  }

  // Labels: first-visit order from the base point, then the optional
  // relabeling permutation.
  std::vector<int> canon(n, 0);
  {
    int next = 1;
    for (int p = 0; p < nn; ++p) {
      int& c = canon[sk.vis_chord[p]];
      if (!c) c = next++;
    }
    require(next == n + 1, "internal: label assignment");
  }
  std::vector<int> out_of_canon(n + 1);
  std::iota(out_of_canon.begin(), out_of_canon.end(), 0);
  if (in.labels) {
    require(static_cast<int>(in.labels->size()) == n, "labels: needs one entry per crossing");
    std::vector<char> used(n + 1, 0);
    for (int i = 0; i < n; ++i) {
      const int l = (*in.labels)[i];
      require(1 <= l && l <= n && !used[l], "labels: must be a permutation of 1.." + std::to_string(n));
      used[l] = 1;
      out_of_canon[i + 1] = l;
    }
  }
  std::vector<int> final_of_prov(n);
  for (int p = 0; p < n; ++p) final_of_prov[p] = out_of_canon[canon[p]];

  d.vis_chord_.resize(nn);
  d.vis_over_.resize(nn);
  d.pos_over_.assign(n + 1, -1);
  d.pos_under_.assign(n + 1, -1);
  d.sign_.assign(n + 1, 0);
  for (int p = 0; p < nn; ++p) {
    const int c = final_of_prov[sk.vis_chord[p]];
    d.vis_chord_[p] = c;
    d.vis_over_[p] = sk.vis_over[p];
    (sk.vis_over[p] ? d.pos_over_ : d.pos_under_)[c] = p;
  }
  for (int c = 1; c <= n; ++c)
    require(d.pos_over_[c] >= 0 && d.pos_under_[c] >= 0,
            "each crossing needs one over and one under passage");
  d.tb_ = 0;
  for (int p = 0; p < n; ++p) {
    d.sign_[final_of_prov[p]] = sk.sign[p];
    d.tb_ += sk.sign[p];
  }

  // Rotation system.
  d.rotation_.assign(n + 1, {});
  for (int c = 1; c <= n; ++c) {
    const int po = d.pos_over_[c], pu = d.pos_under_[c];
    const int oout = Diagram::dart(po, true);
    const int uout = Diagram::dart(pu, true);
    const int oin = Diagram::dart((po + nn - 1) % nn, false);
    const int uin = Diagram::dart((pu + nn - 1) % nn, false);
    d.rotation_[c] = d.sign_[c] > 0 ? std::array<int, 4>{oout, uout, oin, uin}
                                    : std::array<int, 4>{oout, uin, oin, uout};
  }

  // Faces: orbits of next(d) = ccw-predecessor of reverse(d); planarity check.
  auto head = [&](int dt) {
    const int p = Diagram::dart_arc(dt);
    return Diagram::dart_fwd(dt) ? (p + 1) % nn : p;
  };
  auto next_dart = [&](int dt) {
    const auto& r = d.rotation_[d.vis_chord_[head(dt)]];
    const int rev = Diagram::dart_reverse(dt);
    for (int j = 0; j < 4; ++j)
      if (r[j] == rev) return r[(j + 3) % 4];
    fail("internal: dart not at its head crossing");
  };
  d.face_of_dart_.assign(4 * n, -1);
  for (int dt = 0; dt < 4 * n; ++dt) {
    if (d.face_of_dart_[dt] >= 0) continue;
    const int f = static_cast<int>(d.face_darts_.size());
    d.face_darts_.emplace_back();
    int cur = dt;
    do {
      d.face_of_dart_[cur] = f;
      d.face_darts_[f].push_back(cur);
      cur = next_dart(cur);
    } while (cur != dt);
  }
  require(static_cast<int>(d.face_darts_.size()) == n + 2, "the diagram is not planar");

  // Outer face: above the topmost layout vertex (always a plain strand
  // point, so the region over its outgoing edge is unbounded); or as
  // requested by a pd input; or the largest face.
  if (sk.layout) {
    const auto& la = *sk.layout;
    const int nv = static_cast<int>(la.pts.size());
    std::vector<int> arc_of_edge(nv, -1);
    for (int p = 0; p < nn; ++p) {
      int v = la.visit_vertex[p];
      const int stop = la.visit_vertex[(p + 1) % nn];
      do {
        arc_of_edge[v] = p;
        v = (v + 1) % nv;
      } while (v != stop);
    }
    int best = 0;
    for (int v = 1; v < nv; ++v)
      if (la.pts[v].y > la.pts[best].y) best = v;
    const Pt dd = sub(la.pts[(best + 1) % nv], la.pts[best]);
    require(sgn(dd.x) != 0, "internal: vertical edge at the top vertex");
    d.outer_face_ = d.face_of_dart_[Diagram::dart(arc_of_edge[best], sgn(dd.x) > 0)];
  } else if (in.pd && in.pd->outer_arc) {
    const int lab = *in.pd->outer_arc;
    require(1 <= lab && lab <= nn, "outer: arc label out of range");
    const int arc = ((lab - 2 + nn) % nn - shift + nn) % nn;
    d.outer_face_ = d.face_of_dart_[Diagram::dart(arc, in.pd->outer_left)];
  } else {
    int best = 0;
    for (int f = 1; f < static_cast<int>(d.face_darts_.size()); ++f)
      if (d.face_darts_[f].size() > d.face_darts_[best].size()) best = f;
    d.outer_face_ = best;
  }

  // Exact geometry: one variable per arc (the integral of y dx along it),
  // chord lengths and face areas are linear in these. Feasibility by exact
  // simplex; ties between lengths are separated deterministically.
  std::vector<Vec> lencoef(n + 1, Vec(nn, Rat(0)));
  for (int c = 1; c <= n; ++c) {
    int p = d.pos_under_[c];
    while (p != d.pos_over_[c]) {
      lencoef[c][p] += 1;
      p = (p + 1) % nn;
    }
  }
  std::vector<Vec> areacoef(d.face_darts_.size(), Vec(nn, Rat(0)));
  for (std::size_t f = 0; f < d.face_darts_.size(); ++f)
    for (int dt : d.face_darts_[f])
      areacoef[f][Diagram::dart_arc(dt)] += Diagram::dart_fwd(dt) ? Rat(-1) : Rat(1);
  auto base_lp = [&] {
    LinearProgram lp;
    lp.nvars = nn;
    lp.add_eq(Vec(nn, Rat(1)), Rat(0));  // the knot closes up
    for (int c = 1; c <= n; ++c) lp.add_ge(lencoef[c], Rat(1));
    for (int f = 0; f < static_cast<int>(areacoef.size()); ++f)
      if (f != d.outer_face_) lp.add_ge(areacoef[f], Rat(1));
    return lp;
  };
  auto sepvec = [&](int a, int b) {
    Vec v(nn, Rat(0));
    for (int k = 0; k < nn; ++k) v[k] = lencoef[a][k] - lencoef[b][k];
    return v;
  };
  std::vector<std::pair<int, int>> pairs;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) pairs.push_back({a, b});
  SplitMix64 rng(opt.seed);
  for (int i = static_cast<int>(pairs.size()) - 1; i > 0; --i)
    std::swap(pairs[i], pairs[static_cast<std::size_t>(rng.below(i + 1))]);
  std::vector<char> flip(pairs.size(), 0);
  for (auto& f : flip) f = static_cast<char>(rng.next() & 1);

  std::vector<std::pair<int, int>> seps;
  Vec sol;
  for (int round = 0;; ++round) {
    require(round <= n * n + 4, "internal: length separation did not terminate");
    LinearProgram lp = base_lp();
    for (auto [a, b] : seps) lp.add_ge(sepvec(a, b), Rat(1));
    auto s0 = lp_feasible(lp);
    if (!s0) {
      require(round == 0, "internal: length separation became infeasible");
      fail(sk.layout
               ? "internal: the resolved front admits no exact geometry"
               : "pd: no compatible exact geometry (the code is not a Lagrangian projection)");
    }
    sol = std::move(*s0);
    std::vector<Rat> len(n + 1, Rat(0));
    for (int c = 1; c <= n; ++c)
      for (int k = 0; k < nn; ++k) len[c] += lencoef[c][k] * sol[k];
    int ta = 0, tb2 = 0;
    bool tied = false;
    for (std::size_t i = 0; i < pairs.size() && !tied; ++i) {
      auto [a, b] = pairs[i];
      if (len[a] == len[b]) {
        tied = true;
        ta = flip[i] ? b : a;
        tb2 = flip[i] ? a : b;
      }
    }
    if (!tied) {
      d.len_ = std::move(len);
      break;
    }
    bool separated = false;
    for (int attempt = 0; attempt < 2 && !separated; ++attempt) {
      LinearProgram lp2 = base_lp();
      for (auto [a, b] : seps) lp2.add_ge(sepvec(a, b), Rat(1));
      lp2.add_ge(sepvec(ta, tb2), Rat(1));
      if (lp_feasible(lp2)) {
        seps.push_back({ta, tb2});
        separated = true;
      } else {
        std::swap(ta, tb2);
      }
    }
    require(separated, "cannot separate the lengths of two crossings");
  }
  d.area_.resize(d.face_darts_.size());
  for (std::size_t f = 0; f < d.face_darts_.size(); ++f) {
    Rat a(0);
    for (int k = 0; k < nn; ++k) a += areacoef[f][k] * sol[k];
    d.area_[f] = a;
    if (static_cast<int>(f) == d.outer_face_)
      require(sgn(a) < 0, "internal: outer face orientation");
    else
      require(sgn(a) > 0, "internal: bounded face orientation");
  }

  // Gradings. With a layout they are computed twice — via the Maslov
  // potential (stepping at cusps) and via the tangent winding of the capping
  // path from the over- to the under-passage avoiding the base point — and
  // must agree. pd inputs must supply gradings and the rotation number.
  d.grading_.qdeg.assign(n, 0);
  int rotv = 0;
  if (sk.layout) {
    const auto& la = *sk.layout;
    const int nv = static_cast<int>(la.pts.size());
    std::vector<Pt> dir(nv);
    for (int v = 0; v < nv; ++v) dir[v] = sub(la.pts[(v + 1) % nv], la.pts[v]);
    int acc = 0;
    for (int v = 0; v < nv; ++v) acc += half_turn_step(dir[v], dir[(v + 1) % nv], "layout");
    require(acc % 2 == 0, "internal: odd total winding");
    rotv = acc / 2;

    std::map<int, int> mev(la.mevents.begin(), la.mevents.end());
    require(mev.size() == la.mevents.size(), "internal: coincident potential steps");
    std::map<int, int> vis_at;
    for (int p = 0; p < nn; ++p) {
      require(vis_at.emplace(la.visit_vertex[p], p).second, "internal: coincident visits");
      require(!mev.count(la.visit_vertex[p]), "internal: potential step at a crossing");
    }
    const int cut = shift == 0 ? 0 : la.visit_vertex[0];
    std::vector<int> m(nn, 0);
    int macc = 0;
    for (int t = 0; t < nv; ++t) {
      const int v = (cut + t) % nv;
      if (auto it = mev.find(v); it != mev.end()) macc += it->second;
      if (auto it = vis_at.find(v); it != vis_at.end()) m[it->second] = macc;
    }
    require(macc == -2 * rotv, "internal: potential does not close up");
    for (int c = 1; c <= n; ++c) d.grading_.qdeg[c - 1] = m[d.pos_over_[c]] - m[d.pos_under_[c]];

    for (int c = 1; c <= n; ++c) {
      const int po = d.pos_over_[c], pu = d.pos_under_[c];
      const int vo = la.visit_vertex[po], vu = la.visit_vertex[pu];
      std::vector<Pt> seq;
      if (po < pu) {
        const int steps = (vu - vo + nv) % nv;
        for (int t = 0; t < steps; ++t) seq.push_back(dir[(vo + t) % nv]);
      } else {
        const int steps = (vo - vu + nv) % nv;
        for (int t = 0; t < steps; ++t) seq.push_back(neg(dir[(vo - 1 - t + nv) % nv]));
      }
      const int mu = floor_half_turns(seq, "capping path");
      require(mu == d.grading_.qdeg[c - 1], "internal: grading paths disagree");
    }
    if (in.gradings)
      require(*in.gradings == d.grading_.qdeg, "gradings: record disagrees with the computed grading");
    if (in.rot) require(*in.rot == rotv, "rot: record disagrees with the computed rotation number");
  } else {
    require(in.gradings && in.rot, "pd inputs need gradings: and rot: records");
    require(static_cast<int>(in.gradings->size()) == n, "gradings: needs one entry per crossing");
    d.grading_.qdeg = *in.gradings;
    rotv = *in.rot;
  }
  d.grading_.rot = rotv;
  for (int c = 1; c <= n; ++c)
    require((((d.grading_.qdeg[c - 1] % 2) + 2) % 2 == 1) == (d.sign_[c] < 0),
            "crossing sign and grading parity mismatch");

  // Corner sectors.
  d.sector_face_.assign(n + 1, {});
  d.sector_sign_.assign(n + 1, {});
  for (int c = 1; c <= n; ++c) {
    const bool odd = ((d.grading_.qdeg[c - 1] % 2) != 0);
    const int neg_s = odd ? (d.sign_[c] > 0 ? 3 : 2) : (d.sign_[c] > 0 ? 0 : 3);
    for (int s2 = 0; s2 < 4; ++s2) {
      d.sector_face_[c][s2] = d.face_of_dart_[d.rotation_[c][s2]];
      d.sector_sign_[c][s2] = (s2 == neg_s ? -1 : 1);
    }
  }

  if (sk.layout) {
    d.has_layout_ = true;
    d.pts_ = std::move(sk.layout->pts);
    d.visit_vertex_ = std::move(sk.layout->visit_vertex);
  }
  return d;
}

// ---------------------------------------------------------------------------
// Public interface.

int Diagram::dart_head(int d) const {
  const int p = dart_arc(d);
  return dart_fwd(d) ? (p + 1) % (2 * n_) : p;
}

int Diagram::dart_tail(int d) const { return dart_head(dart_reverse(d)); }

int Diagram::role_of_away_dart(int chord, int d) const {
  const auto& r = rotation(chord);
  for (int i = 0; i < 4; ++i)
    if (r[i] == d) {
      if (sign(chord) > 0) return i;
      constexpr int role_neg[4] = {0, 3, 2, 1};
      return role_neg[i];
    }
  fail("dart is not at this crossing");
}

int Diagram::sector_between(int chord, int away_a, int away_b) const {
  const auto& r = rotation(chord);
  for (int s = 0; s < 4; ++s)
    if (r[s] == away_a && r[(s + 1) % 4] == away_b) return s;
  return -1;
}

ParsedInput parse_input(std::istream& in) {
  std::vector<std::pair<std::string, std::string>> recs;
  std::string line;
  auto record_start = [](const std::string& l, std::string& key, std::string& val) {
    static const char* keys[] = {"front:",  "pd:",    "gradings:", "rot:", "outer:",
                                 "labels:", "basepoint:", "X:",    "O:"};
    for (const char* k : keys) {
      const std::string ks(k);
      if (l.rfind(ks, 0) == 0) {
        key = ks.substr(0, ks.size() - 1);
        val = strip(l.substr(ks.size()));
        return true;
      }
    }
    if (l.rfind("grid", 0) == 0 &&
        (l.size() == 4 || std::isspace(static_cast<unsigned char>(l[4])))) {
      key = "grid";
      val = strip(l.substr(4));
      return true;
    }
    return false;
  };
  while (std::getline(in, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    line = strip(line);
    if (line.empty()) continue;
    std::string key, val;
    if (record_start(line, key, val)) {
      for (const auto& r : recs) require(r.first != key, "duplicate record '" + key + "'");
      recs.emplace_back(key, val);
    } else {
      require(!recs.empty(), "unknown record '" + line + "'");
      recs.back().second += " " + line;
    }
  }
  require(!recs.empty(), "empty input");

  ParsedInput out;
  std::optional<std::string> grid_val, x_val, o_val, outer_val;
  for (auto& [key, val] : recs) {
    if (key == "front") {
      out.front = parse_front_value(val);
    } else if (key == "pd") {
      PdCode pd;
      pd.tuples = parse_pd_value(val);
      out.pd = pd;
    } else if (key == "gradings") {
      out.gradings = parse_int_list(val, "gradings:");
    } else if (key == "labels") {
      out.labels = parse_int_list(val, "labels:");
    } else if (key == "rot") {
      out.rot = parse_int(val, "rot:");
    } else if (key == "basepoint") {
      out.basepoint = parse_int(val, "basepoint:");
    } else if (key == "outer") {
      outer_val = val;
    } else if (key == "grid") {
      grid_val = val;
    } else if (key == "X") {
      x_val = val;
    } else {
      o_val = val;
    }
  }
  if (grid_val) {
    require(x_val && o_val, "grid inputs need X: and O: records");
    GridDiagram g;
    g.size = parse_int(*grid_val, "grid");
    g.x_col = parse_int_list(*x_val, "X:");
    g.o_col = parse_int_list(*o_val, "O:");
    out.grid = g;
  } else {
    require(!x_val && !o_val, "X:/O: records need a grid record");
  }
  if (outer_val) {
    require(out.pd.has_value(), "outer: applies to pd inputs only");
    std::istringstream os(*outer_val);
    std::string arc, side;
    os >> arc >> side;
    require(!arc.empty(), "outer: needs an arc label");
    out.pd->outer_arc = parse_int(arc, "outer:");
    if (side.empty()) side = "L";
    require(side == "L" || side == "R", "outer: side must be L or R");
    out.pd->outer_left = (side == "L");
    std::string tail;
    require(!(os >> tail), "outer: trailing text");
  }
  const int forms = (out.grid ? 1 : 0) + (out.front ? 1 : 0) + (out.pd ? 1 : 0);
  require(forms == 1, "input needs exactly one of grid/front:/pd:");
  return out;
}

ParsedInput parse_input_string(const std::string& text) {
  std::istringstream ss(text);
  return parse_input(ss);
}

FrontWord grid_to_front(const GridDiagram& g) {
  const int n = g.size;
  require(n >= 2, "grid size must be at least 2");
  require(static_cast<int>(g.x_col.size()) == n && static_cast<int>(g.o_col.size()) == n,
          "grid needs one X and one O column per row");
  std::vector<int> x_row(n + 1, 0), o_row(n + 1, 0);
  for (int r = 1; r <= n; ++r) {
    const int xc = g.x_col[r - 1], oc = g.o_col[r - 1];
    require(1 <= xc && xc <= n && 1 <= oc && oc <= n, "grid marker column out of range");
    require(xc != oc, "X and O of one row share a cell");
    require(!x_row[xc], "two X markers in one column");
    require(!o_row[oc], "two O markers in one column");
    x_row[xc] = r;
    o_row[oc] = r;
  }

  // Events in coordinates rotated 45 degrees counterclockwise:
  // (x, y) = (c - r, c + r). Verticals get slope -1 (overcrossings),
  // horizontals slope +1.
  struct Ev {
    int x, y;
    char kind;  // 'L', 'R', 'C'rossing, 'S'mooth corner
    int c, r;
    bool west_h = false;  // smooth corners: the western piece is the horizontal
  };
  std::vector<Ev> evs;
  auto corner = [&](int c, int r, int dc, int dr) {
    const int dxh = dc, dxv = -dr;  // x-direction of the two incident pieces
    if (dxh < 0 && dxv < 0)
      evs.push_back({c - r, c + r, 'R', c, r, false});
    else if (dxh > 0 && dxv > 0)
      evs.push_back({c - r, c + r, 'L', c, r, false});
    else
      evs.push_back({c - r, c + r, 'S', c, r, dxh < 0});
  };
  for (int r = 1; r <= n; ++r) {
    const int xc = g.x_col[r - 1], oc = g.o_col[r - 1];
    corner(xc, r, oc - xc, o_row[xc] - r);
    corner(oc, r, xc - oc, x_row[oc] - r);
  }
  for (int c = 1; c <= n; ++c) {
    const int rlo = std::min(x_row[c], o_row[c]), rhi = std::max(x_row[c], o_row[c]);
    for (int r = rlo + 1; r < rhi; ++r) {
      const int clo = std::min(g.x_col[r - 1], g.o_col[r - 1]);
      const int chi = std::max(g.x_col[r - 1], g.o_col[r - 1]);
      if (clo < c && c < chi) evs.push_back({c - r, c + r, 'C', c, r, false});
    }
  }
  std::sort(evs.begin(), evs.end(), [](const Ev& a, const Ev& b) {
    return a.x != b.x ? a.x < b.x : a.y > b.y;
  });

  // Sweep left to right; all strands have slope +-1, so ranks are exact.
  struct Str {
    long y0, x0;
    int slope;
    bool vert;
    int id;
  };
  std::vector<Str> act;
  auto yat = [](const Str& s, long x) { return s.y0 + s.slope * (x - s.x0); };
  auto find = [&](bool vert, int id) {
    for (std::size_t i = 0; i < act.size(); ++i)
      if (act[i].vert == vert && act[i].id == id) return static_cast<int>(i);
    fail("internal: grid strand lost");
  };
  FrontWord fw;
  for (const Ev& ev : evs) {
    const long x = ev.x, y = ev.y;
    if (ev.kind == 'L') {
      int idx = 0;
      for (const auto& s : act) {
        const long sy = yat(s, x);
        require(sy != y, "internal: grid strand through a marker");
        if (sy < y) ++idx;
      }
      act.insert(act.begin() + idx, {y, x, -1, true, ev.c});
      act.insert(act.begin() + idx + 1, {y, x, +1, false, ev.r});
      fw.events.push_back({'L', idx + 1});
    } else if (ev.kind == 'R') {
      const int iv = find(true, ev.c), ih = find(false, ev.r);
      const int lo = std::min(iv, ih);
      require(std::max(iv, ih) == lo + 1, "internal: closing strands not adjacent");
      fw.events.push_back({'R', lo + 1});
      act.erase(act.begin() + lo, act.begin() + lo + 2);
    } else if (ev.kind == 'C') {
      const int iv = find(true, ev.c), ih = find(false, ev.r);
      require(iv == ih + 1, "internal: crossing strands not adjacent");
      fw.events.push_back({'X', ih + 1});
      std::swap(act[ih], act[iv]);
    } else {  // smooth corner: the strand turns, identity and slope change
      const int i = ev.west_h ? find(false, ev.r) : find(true, ev.c);
      require(yat(act[i], x) == y, "internal: smooth corner mismatch");
      act[i] = ev.west_h ? Str{y, x, -1, true, ev.c} : Str{y, x, +1, false, ev.r};
    }
  }
  return fw;
}

Diagram build_diagram(const ParsedInput& in, const DiagramOptions& opt) {
  const int forms = (in.grid ? 1 : 0) + (in.front ? 1 : 0) + (in.pd ? 1 : 0);
  require(forms == 1, "input needs exactly one of grid/front:/pd:");
  Skeleton sk = in.front  ? sweep_front(*in.front)
                : in.grid ? sweep_front(grid_to_front(*in.grid))
                          : read_pd(*in.pd);
  return DiagramBuilder::assemble(std::move(sk), in, opt);
}

}  // namespace lsft
