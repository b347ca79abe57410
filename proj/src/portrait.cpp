#include "gkmn/portrait.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <deque>
#include <functional>
#include <limits>
#include <unordered_map>
#include <vector>

#include "gkmn/errors.hpp"
#include "gkmn/verify.hpp"

namespace gkmn::portrait {

namespace {

using bifurcation::Equilibrium;
using bifurcation::EquilibriumKind;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// A planar Hamiltonian-like system abstracted for rendering. The tracing
// field for Type 2 is the regularized chart (time rescaled by phi^3), which
// shares the orbit geometry with the singular system but has no pole.
struct PlaneSystem {
  std::function<double(double, double)> H;
  std::function<std::array<double, 2>(double, double)> grad;
  wavesystems::Field field;
  // (lambda, eigenvector of the unstable direction) at a saddle u.
  std::function<std::pair<double, std::array<double, 2>>(double)> saddle_frame;
  bool type2 = false;
};

PlaneSystem plane_type1(const wavesystems::SystemCoefficients& s) {
  PlaneSystem ps;
  ps.H = [s](double u, double y) { return wavesystems::energy1(s, u, y); };
  ps.grad = [s](double u, double y) {
    return std::array<double, 2>{-s.A * u + 2.0 * s.B * u * u * u, y};
  };
  ps.field = wavesystems::field1(s);
  ps.saddle_frame = [s](double u) {
    const double lam = std::sqrt(std::max(0.0, s.A - 6.0 * s.B * u * u));
    return std::make_pair(lam, std::array<double, 2>{1.0, lam});
  };
  return ps;
}

PlaneSystem plane_type2(const wavesystems::AlphaCoefficients& al) {
  PlaneSystem ps;
  ps.type2 = true;
  ps.H = [al](double u, double y) {
    if (u == 0.0) return kNaN;
    try {
      return wavesystems::energy2(al, u, y);
    } catch (const std::exception&) {
      return kNaN;
    }
  };
  ps.grad = [al](double u, double y) {
    return std::array<double, 2>{
        -al.alpha1 * u * u * u - al.alpha2 * u - al.alpha3 / (u * u * u), y};
  };
  ps.field = wavesystems::field2_regular(al);
  ps.saddle_frame = [al](double u) {
    // Regular-chart Jacobian at (u, 0) is [[0, u^3], [P'(u), 0]].
    const double pd = 6.0 * al.alpha1 * std::pow(u, 5) + 4.0 * al.alpha2 * u * u * u;
    const double lam = std::sqrt(std::max(0.0, u * u * u * pd));
    return std::make_pair(lam, std::array<double, 2>{u * u * u, lam});
  };
  return ps;
}

std::vector<double> auto_levels(const std::vector<Equilibrium>& eqs) {
  if (eqs.empty()) return {-1.0, 0.0, 1.0};
  std::vector<double> en;
  for (const auto& e : eqs) en.push_back(e.energy);
  std::sort(en.begin(), en.end());
  std::vector<double> uniq;
  for (double v : en)
    if (uniq.empty() || std::fabs(v - uniq.back()) > 1e-12 * (1.0 + std::fabs(v)))
      uniq.push_back(v);
  std::vector<double> lv = uniq;
  for (std::size_t i = 0; i + 1 < uniq.size(); ++i) lv.push_back(0.5 * (uniq[i] + uniq[i + 1]));
  const double span = uniq.back() - uniq.front();
  const double delta = std::max(1.0, 0.5 * span);
  lv.push_back(uniq.front() - delta);
  lv.push_back(uniq.back() + delta);
  std::sort(lv.begin(), lv.end());
  return lv;
}

struct Pt {
  double u, y;
};

Pt project_onto_level(const PlaneSystem& sys, Pt p, double h, double tol) {
  for (int it = 0; it < 3; ++it) {
    const double val = sys.H(p.u, p.y);
    if (!std::isfinite(val)) return p;
    const double r = val - h;
    if (std::fabs(r) <= tol) break;
    const auto g = sys.grad(p.u, p.y);
    const double g2 = g[0] * g[0] + g[1] * g[1];
    if (g2 < 1e-12) break;
    p.u -= r * g[0] / g2;
    p.y -= r * g[1] / g2;
  }
  return p;
}

// Segment endpoints are named by global edge ids so that polylines can be
// chained across neighboring cells. Edge codes within a cell: 0=B,1=R,2=T,3=L.
void march_level(const PlaneSystem& sys, const std::vector<double>& V, int G,
                 const PortraitOptions& opt, double h, int& next_id,
                 std::vector<Curve>& out) {
  const double du = (opt.u_max - opt.u_min) / G;
  const double dy = (opt.y_max - opt.y_min) / G;
  const int W = G + 1;
  // Tiny offset so grid nodes never sit exactly on the level (symmetric boxes
  // otherwise put equilibria exactly on nodes).
  const double hh = h + 1e-12 * (1.0 + std::fabs(h));

  auto node = [&](int i, int j) { return V[static_cast<std::size_t>(j) * W + i] - hh; };

  std::unordered_map<std::int64_t, Pt> epts;
  std::vector<std::array<std::int64_t, 2>> segs;

  auto edge_id = [&](int code, int i, int j) -> std::int64_t {
    switch (code) {
      case 0: return (static_cast<std::int64_t>(j) * W + i) * 2;            // B
      case 1: return (static_cast<std::int64_t>(j) * W + i + 1) * 2 + 1;    // R
      case 2: return (static_cast<std::int64_t>(j + 1) * W + i) * 2;        // T
      default: return (static_cast<std::int64_t>(j) * W + i) * 2 + 1;       // L
    }
  };
  auto edge_point = [&](int code, int i, int j) -> Pt {
    int ia, ja, ib, jb;
    switch (code) {
      case 0: ia = i; ja = j; ib = i + 1; jb = j; break;
      case 1: ia = i + 1; ja = j; ib = i + 1; jb = j + 1; break;
      case 2: ia = i; ja = j + 1; ib = i + 1; jb = j + 1; break;
      default: ia = i; ja = j; ib = i; jb = j + 1; break;
    }
    const double va = node(ia, ja), vb = node(ib, jb);
    double t = va / (va - vb);
    t = std::clamp(t, 1e-9, 1.0 - 1e-9);
    return {opt.u_min + (ia + t * (ib - ia)) * du, opt.y_min + (ja + t * (jb - ja)) * dy};
  };
  auto add_seg = [&](int ca, int cb, int i, int j) {
    const std::int64_t ea = edge_id(ca, i, j), eb = edge_id(cb, i, j);
    if (!epts.count(ea)) epts.emplace(ea, edge_point(ca, i, j));
    if (!epts.count(eb)) epts.emplace(eb, edge_point(cb, i, j));
    segs.push_back({ea, eb});
  };

  for (int j = 0; j < G; ++j)
    for (int i = 0; i < G; ++i) {
      const double v00 = node(i, j), v10 = node(i + 1, j), v11 = node(i + 1, j + 1),
                   v01 = node(i, j + 1);
      if (!std::isfinite(v00) || !std::isfinite(v10) || !std::isfinite(v11) ||
          !std::isfinite(v01))
        continue;
      const int mask = (v00 >= 0 ? 1 : 0) | (v10 >= 0 ? 2 : 0) | (v11 >= 0 ? 4 : 0) |
                       (v01 >= 0 ? 8 : 0);
      switch (mask) {
        case 0: case 15: break;
        case 1: case 14: add_seg(3, 0, i, j); break;
        case 2: case 13: add_seg(0, 1, i, j); break;
        case 3: case 12: add_seg(3, 1, i, j); break;
        case 4: case 11: add_seg(1, 2, i, j); break;
        case 6: case 9: add_seg(0, 2, i, j); break;
        case 7: case 8: add_seg(3, 2, i, j); break;
        case 5:
          if (0.25 * (v00 + v10 + v11 + v01) >= 0) {
            add_seg(0, 1, i, j);
            add_seg(3, 2, i, j);
          } else {
            add_seg(3, 0, i, j);
            add_seg(1, 2, i, j);
          }
          break;
        case 10:
          if (0.25 * (v00 + v10 + v11 + v01) >= 0) {
            add_seg(3, 0, i, j);
            add_seg(1, 2, i, j);
          } else {
            add_seg(0, 1, i, j);
            add_seg(3, 2, i, j);
          }
          break;
        default: break;
      }
    }

  // Chain segments into polylines (every edge touches at most two segments).
  std::unordered_map<std::int64_t, std::vector<int>> adj;
  for (int k = 0; k < static_cast<int>(segs.size()); ++k) {
    adj[segs[k][0]].push_back(k);
    adj[segs[k][1]].push_back(k);
  }
  std::vector<char> used(segs.size(), 0);
  const double ptol = 1e-7 * (1.0 + std::fabs(h));

  for (int k0 = 0; k0 < static_cast<int>(segs.size()); ++k0) {
    if (used[k0]) continue;
    used[k0] = 1;
    std::deque<std::int64_t> keys{segs[k0][0], segs[k0][1]};
    bool closed = false;
    auto extend = [&](bool back) {
      for (;;) {
        const std::int64_t end = back ? keys.back() : keys.front();
        int next = -1;
        for (int cand : adj[end])
          if (!used[cand]) {
            next = cand;
            break;
          }
        if (next < 0) break;
        used[next] = 1;
        const std::int64_t other = segs[next][0] == end ? segs[next][1] : segs[next][0];
        if (back)
          keys.push_back(other);
        else
          keys.push_front(other);
        if (keys.front() == keys.back()) {
          closed = true;
          break;
        }
      }
    };
    extend(true);
    if (!closed) extend(false);

    Curve c;
    c.id = next_id++;
    c.h = h;
    c.cls = "level";
    c.closed = closed;
    c.pts.reserve(keys.size());
    for (std::int64_t key : keys) {
      const Pt p = project_onto_level(sys, epts.at(key), h, ptol);
      c.pts.push_back({p.u, p.y});
    }
    out.push_back(std::move(c));
  }
}

void trace_separatrices(const PlaneSystem& sys, const std::vector<Marker>& markers,
                        const PortraitOptions& opt, int& next_id, std::vector<Curve>& out) {
  const double exu = 0.02 * (opt.u_max - opt.u_min);
  const double exy = 0.02 * (opt.y_max - opt.y_min);
  auto inside = [&](const wavesystems::State& p) {
    return p[0] >= opt.u_min - exu && p[0] <= opt.u_max + exu && p[1] >= opt.y_min - exy &&
           p[1] <= opt.y_max + exy;
  };
  for (const auto& mk : markers) {
    if (mk.kind != EquilibriumKind::Saddle) continue;
    const auto [lam, vu] = sys.saddle_frame(mk.u);
    if (lam <= 0.0) continue;
    const double nvu = std::hypot(vu[0], vu[1]);
    const std::array<double, 2> un{vu[0] / nvu, vu[1] / nvu};    // unstable
    const std::array<double, 2> st{vu[0] / nvu, -vu[1] / nvu};   // stable
    const double eps = 1e-6 * (1.0 + std::fabs(mk.u));
    struct Branch {
      std::array<double, 2> dir;
      double tdir;
    };
    const Branch branches[4] = {{un, 1.0}, {{-un[0], -un[1]}, 1.0}, {st, -1.0},
                                {{-st[0], -st[1]}, -1.0}};
    for (const auto& br : branches) {
      const wavesystems::State y0{mk.u + eps * br.dir[0], mk.y + eps * br.dir[1]};
      const verify::Trajectory tr = verify::rk_integrate(sys.field, y0, 0.0, br.tdir * 40.0, 1e-10);
      Curve c;
      c.id = next_id;
      c.h = mk.energy;
      c.cls = "separatrix";
      const std::size_t stride = std::max<std::size_t>(1, tr.y.size() / 600);
      for (std::size_t i = 0; i < tr.y.size(); ++i) {
        if (i % stride != 0 && i + 1 != tr.y.size() && inside(tr.y[i])) continue;
        c.pts.push_back({tr.y[i][0], tr.y[i][1]});
        if (!inside(tr.y[i])) break;
      }
      if (c.pts.size() < 2) continue;
      ++next_id;
      out.push_back(std::move(c));
    }
  }
}

Portrait build(const PlaneSystem& sys, const std::vector<Equilibrium>& eqs,
               const PortraitOptions& opt) {
  Portrait out;

  for (const auto& e : eqs) out.markers.push_back({e.u, 0.0, e.kind, e.energy});
  std::stable_sort(out.markers.begin(), out.markers.end(),
                   [](const Marker& a, const Marker& b) { return a.u < b.u; });

  std::vector<double> lv = opt.levels.empty() ? auto_levels(eqs) : opt.levels;
  std::sort(lv.begin(), lv.end());
  lv.erase(std::unique(lv.begin(), lv.end(),
                       [](double a, double b) {
                         return std::fabs(a - b) <= 1e-12 * (1.0 + std::fabs(a));
                       }),
           lv.end());
  out.levels = lv;

  const int G = std::max(16, opt.grid);
  const int W = G + 1;
  std::vector<double> V(static_cast<std::size_t>(W) * W);
  for (int j = 0; j < W; ++j) {
    const double y = opt.y_min + j * (opt.y_max - opt.y_min) / G;
    for (int i = 0; i < W; ++i) {
      const double u = opt.u_min + i * (opt.u_max - opt.u_min) / G;
      const bool masked = sys.type2 && std::fabs(u) < opt.band;
      V[static_cast<std::size_t>(j) * W + i] = masked ? kNaN : sys.H(u, y);
    }
  }

  int next_id = 0;
  for (double h : lv) march_level(sys, V, G, opt, h, next_id, out.curves);
  trace_separatrices(sys, out.markers, opt, next_id, out.curves);
  return out;
}

void appendf(std::string& s, const char* fmt, ...) {
  char buf[256];
  va_list ap;
  va_start(ap, fmt);
  vsnprintf(buf, sizeof buf, fmt, ap);
  va_end(ap);
  s += buf;
}

}  // namespace

Portrait make_portrait_type1(const wavesystems::SystemCoefficients& s,
                             const PortraitOptions& opt) {
  return build(plane_type1(s), bifurcation::equilibria_type1(s), opt);
}

Portrait make_portrait_type2(const wavesystems::AlphaCoefficients& al,
                             const PortraitOptions& opt) {
  return build(plane_type2(al), bifurcation::equilibria_type2(al), opt);
}

int bounded_component_count(const Portrait& p, double h) {
  int n = 0;
  for (const auto& c : p.curves)
    if (c.cls == "level" && c.closed && std::fabs(c.h - h) <= 1e-9 * (1.0 + std::fabs(h))) ++n;
  return n;
}

std::string to_svg(const Portrait& p, const PortraitOptions& opt) {
  const double x0 = 60, x1 = 780, y0 = 20, y1 = 600;
  auto sx = [&](double u) { return x0 + (u - opt.u_min) / (opt.u_max - opt.u_min) * (x1 - x0); };
  auto sy = [&](double y) { return y1 - (y - opt.y_min) / (opt.y_max - opt.y_min) * (y1 - y0); };

  std::string s;
  s.reserve(1 << 20);
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"640\" "
       "viewBox=\"0 0 800 640\">\n";
  s += "<defs><clipPath id=\"plot\">";
  appendf(s, "<rect x=\"%.2f\" y=\"%.2f\" width=\"%.2f\" height=\"%.2f\"/>", x0, y0, x1 - x0,
          y1 - y0);
  s += "</clipPath></defs>\n";
  s += "<rect x=\"0\" y=\"0\" width=\"800\" height=\"640\" fill=\"#ffffff\"/>\n";
  appendf(s,
          "<rect x=\"%.2f\" y=\"%.2f\" width=\"%.2f\" height=\"%.2f\" fill=\"none\" "
          "stroke=\"#333333\" stroke-width=\"1\"/>\n",
          x0, y0, x1 - x0, y1 - y0);
  s += "<g clip-path=\"url(#plot)\">\n";
  for (const auto& c : p.curves) {
    const bool sep = c.cls == "separatrix";
    appendf(s, "<polyline fill=\"none\" stroke=\"%s\" stroke-width=\"%s\" points=\"",
            sep ? "#d62728" : "#1f77b4", sep ? "1.5" : "1");
    for (const auto& q : c.pts) appendf(s, "%.2f,%.2f ", sx(q[0]), sy(q[1]));
    s += "\"/>\n";
  }
  s += "</g>\n";
  for (const auto& m : p.markers) {
    const double cx = sx(m.u), cy = sy(m.y);
    switch (m.kind) {
      case EquilibriumKind::Center:
        appendf(s, "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"4\" fill=\"#000000\"/>\n", cx, cy);
        break;
      case EquilibriumKind::Saddle:
        appendf(s,
                "<path d=\"M %.2f %.2f L %.2f %.2f M %.2f %.2f L %.2f %.2f\" "
                "stroke=\"#000000\" stroke-width=\"1.5\"/>\n",
                cx - 5, cy - 5, cx + 5, cy + 5, cx - 5, cy + 5, cx + 5, cy - 5);
        break;
      case EquilibriumKind::Cusp:
        appendf(s, "<polygon points=\"%.2f,%.2f %.2f,%.2f %.2f,%.2f\" fill=\"#000000\"/>\n",
                cx, cy - 5.5, cx - 5, cy + 4, cx + 5, cy + 4);
        break;
      case EquilibriumKind::DegenerateCenter:
        appendf(s,
                "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"4\" fill=\"none\" stroke=\"#000000\" "
                "stroke-width=\"1.5\"/>\n",
                cx, cy);
        break;
      case EquilibriumKind::DegenerateSaddle:
        appendf(s,
                "<path d=\"M %.2f %.2f L %.2f %.2f M %.2f %.2f L %.2f %.2f\" "
                "stroke=\"#555555\" stroke-width=\"1.5\"/>\n"
                "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"6\" fill=\"none\" stroke=\"#555555\" "
                "stroke-width=\"1\"/>\n",
                cx - 5, cy - 5, cx + 5, cy + 5, cx - 5, cy + 5, cx + 5, cy - 5, cx, cy);
        break;
    }
  }
  s += "</svg>\n";
  return s;
}

std::string to_csv(const Portrait& p) {
  std::string s = "curve_id,class,h,u,y\n";
  for (const auto& c : p.curves)
    for (const auto& q : c.pts)
      appendf(s, "%d,%s,%.17g,%.17g,%.17g\n", c.id, c.cls.c_str(), c.h, q[0], q[1]);
  return s;
}

}  // namespace gkmn::portrait
