#include "dcamb/io.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace dcamb {
namespace {

using nlohmann::json;

json root_json(const Root& r) { return r.coords(); }

Root root_from(const json& j, int n) {
  auto coords = j.get<std::vector<std::int64_t>>();
  if (static_cast<int>(coords.size()) != n) throw std::invalid_argument("root has the wrong number of coordinates");
  return Root(std::move(coords));
}

VertexSide side_from(const std::string& s) {
  if (s == "omega") return VertexSide::Omega;
  if (s == "neg") return VertexSide::NegOmega;
  if (s == "glued") return VertexSide::Glued;
  throw std::invalid_argument("unknown vertex side '" + s + "'");
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + '"';
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", std::abs(x) < 0.005 ? 0.0 : x);
  return buf;
}

struct P2 {
  double x;
  double y;
};

// Sutherland-Hodgman clip of a convex polygon against a*x + b*y + c >= 0.
std::vector<P2> clip(const std::vector<P2>& poly, double a, double b, double c) {
  std::vector<P2> out;
  const std::size_t m = poly.size();
  for (std::size_t i = 0; i < m; ++i) {
    const P2 p = poly[i];
    const P2 q = poly[(i + 1) % m];
    const double fp = a * p.x + b * p.y + c;
    const double fq = a * q.x + b * q.y + c;
    if (fp >= 0) out.push_back(p);
    if ((fp >= 0) != (fq >= 0)) {
      const double t = fp / (fp - fq);
      out.push_back({p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)});
    }
  }
  return out;
}

double area(const std::vector<P2>& poly) {
  double s = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const P2& p = poly[i];
    const P2& q = poly[(i + 1) % poly.size()];
    s += p.x * q.y - q.x * p.y;
  }
  return s / 2;
}

}  // namespace

json to_json(const LabeledQuasiGraph& g) {
  const auto inc = g.incidence();
  json vertices = json::array();
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    const auto& vx = g.vertices[v];
    json labels = json::array();
    std::vector<Root> basis;
    for (const auto& p : inc[v]) {
      if (p.label) {
        labels.push_back(root_json(*p.label));
        basis.push_back(*p.label);
      }
    }
    json rays = json::array();
    if (static_cast<int>(basis.size()) == g.n) {
      try {
        for (const auto& ray : dual_basis(basis)) {
          json r = json::array();
          for (const auto& q : ray) r.push_back({q.numerator(), q.denominator()});
          rays.push_back(std::move(r));
        }
      } catch (const std::exception&) {
        rays = json::array();
      }
    }
    json jv = {{"key", vx.key}, {"side", to_string(vx.side)}, {"word", vx.name}, {"labels", labels}, {"rays", rays}};
    if (vx.omega_element) jv["omega_window"] = vx.omega_element->window();
    if (vx.neg_element) jv["neg_window"] = vx.neg_element->window();
    vertices.push_back(std::move(jv));
  }
  json edges = json::array();
  for (const auto& e : g.edges) {
    edges.push_back({{"u", e.u}, {"v", e.v}, {"label_u", root_json(e.label_u)}, {"label_v", root_json(e.label_v)}});
  }
  json halves = json::array();
  for (const auto& h : g.half_edges) {
    halves.push_back({{"vertex", h.vertex}, {"label", h.label ? root_json(*h.label) : json(nullptr)}});
  }
  json doc = {{"n", g.n}, {"vertices", vertices}, {"edges", edges}, {"half_edges", halves}};
  doc["base"] = g.base ? json(*g.base) : json(nullptr);
  return doc;
}

LabeledQuasiGraph graph_from_json(const json& doc) {
  LabeledQuasiGraph g;
  g.n = doc.at("n").get<int>();
  if (g.n < 3) throw std::invalid_argument("rank must be at least 3");
  for (const auto& jv : doc.at("vertices")) {
    FrameworkVertex vx;
    vx.key = jv.at("key").get<std::string>();
    vx.side = side_from(jv.at("side").get<std::string>());
    vx.name = jv.value("word", std::string{});
    if (jv.contains("omega_window")) vx.omega_element = AffinePermutation(jv["omega_window"].get<std::vector<std::int64_t>>());
    if (jv.contains("neg_window")) vx.neg_element = AffinePermutation(jv["neg_window"].get<std::vector<std::int64_t>>());
    g.vertices.push_back(std::move(vx));
  }
  const std::size_t nv = g.vertices.size();
  auto index = [&](const json& j) {
    const auto i = j.get<std::size_t>();
    if (i >= nv) throw std::invalid_argument("vertex index " + std::to_string(i) + " out of range");
    return i;
  };
  for (const auto& je : doc.at("edges")) {
    g.edges.push_back({index(je.at("u")), index(je.at("v")), root_from(je.at("label_u"), g.n),
                       root_from(je.at("label_v"), g.n)});
  }
  if (doc.contains("half_edges")) {
    for (const auto& jh : doc["half_edges"]) {
      HalfEdge h{index(jh.at("vertex")), std::nullopt};
      if (!jh.at("label").is_null()) h.label = root_from(jh["label"], g.n);
      g.half_edges.push_back(std::move(h));
    }
  }
  if (doc.contains("base") && !doc["base"].is_null()) g.base = index(doc["base"]);
  return g;
}

json to_json(const AxiomReport& report, const LabeledQuasiGraph& g) {
  json results = json::array();
  for (const auto& r : report.results) {
    json jr = {{"axiom", r.axiom}, {"passed", r.passed}};
    if (!r.info.empty()) jr["info"] = r.info;
    if (r.witness) {
      json w = {{"detail", r.witness->detail}};
      if (r.witness->vertex) {
        w["vertex"] = *r.witness->vertex;
        w["vertex_name"] = g.vertices[*r.witness->vertex].name;
      }
      if (r.witness->edge) w["edge"] = *r.witness->edge;
      if (r.witness->label) w["label"] = root_json(*r.witness->label);
      jr["witness"] = std::move(w);
    }
    results.push_back(std::move(jr));
  }
  return {{"n", g.n}, {"passed", report.passed()}, {"results", results}};
}

json to_json(const ExchangeGraph& oracle) {
  json seeds = json::array();
  for (std::size_t s = 0; s < oracle.seeds.size(); ++s) {
    const Seed& seed = oracle.seeds[s];
    auto mat = [&](const IntMatrix& m) {
      json rows = json::array();
      for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
        rows.push_back(std::move(row));
      }
      return rows;
    };
    seeds.push_back({{"B", mat(seed.B)}, {"C", mat(seed.C)}, {"G", mat(seed.G)}, {"neighbors", oracle.neighbor[s]}});
  }
  return {{"n", oracle.n}, {"seeds", seeds}};
}

std::string to_dot(const LabeledQuasiGraph& g) {
  std::ostringstream os;
  os << "graph dcamb_" << g.n << " {\n";
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    const auto& vx = g.vertices[v];
    const std::string name = vx.name.empty() ? "e" : vx.name;
    os << "  v" << v << " [label=" << quoted(name) << ", side=" << quoted(to_string(vx.side));
    if (g.base && *g.base == v) os << ", shape=doublecircle";
    os << "];\n";
  }
  for (const auto& e : g.edges) {
    os << "  v" << e.u << " -- v" << e.v << " [taillabel=" << quoted(e.label_u.to_string())
       << ", headlabel=" << quoted(e.label_v.to_string()) << "];\n";
  }
  for (std::size_t h = 0; h < g.half_edges.size(); ++h) {
    const auto& he = g.half_edges[h];
    os << "  h" << h << " [shape=point];\n";
    os << "  v" << he.vertex << " -- h" << h << " [style=dashed, taillabel="
       << quoted(he.label ? he.label->to_string() : "") << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_svg(const LabeledQuasiGraph& g) {
  if (g.n != 3) throw std::invalid_argument("SVG rendering is only available for n = 3");
  // Plane <x, delta> = t, parametrized as x = (t/3)(1,1,1) + a*u + b*w with
  // u, w an orthonormal basis of delta-perp.
  const std::array<double, 3> u{1 / std::sqrt(2.0), -1 / std::sqrt(2.0), 0};
  const std::array<double, 3> w{1 / std::sqrt(6.0), 1 / std::sqrt(6.0), -2 / std::sqrt(6.0)};
  constexpr double kExtent = 2.5;
  constexpr double kScale = 90;
  constexpr double kPanel = 2 * kExtent * kScale;
  const auto inc = g.incidence();

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(2 * kPanel + 60) << "\" height=\"" << fmt(kPanel + 60)
     << "\" font-family=\"sans-serif\" font-size=\"10\">\n";
  for (int chart = 0; chart < 2; ++chart) {
    const double t = chart == 0 ? 1.0 : -1.0;
    const double ox = 20 + chart * (kPanel + 20);
    const double oy = 40;
    os << "<g id=\"chart-" << (chart == 0 ? "plus" : "minus") << "\">\n";
    os << "<text x=\"" << fmt(ox) << "\" y=\"" << fmt(oy - 10) << "\">&lt;x,delta&gt; = " << (chart == 0 ? "+1" : "-1")
       << "</text>\n";
    os << "<rect x=\"" << fmt(ox) << "\" y=\"" << fmt(oy) << "\" width=\"" << fmt(kPanel) << "\" height=\"" << fmt(kPanel)
       << "\" fill=\"none\" stroke=\"#999\"/>\n";
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
      std::vector<P2> poly{{-kExtent, -kExtent}, {kExtent, -kExtent}, {kExtent, kExtent}, {-kExtent, kExtent}};
      for (const auto& p : inc[v]) {
        if (!p.label) continue;
        // <x, beta> = sum_i x_i beta_i, affine in (a, b).
        double a = 0, b = 0, c = 0;
        for (int i = 0; i < 3; ++i) {
          const double bi = static_cast<double>((*p.label)[i + 1]);
          a += u[i] * bi;
          b += w[i] * bi;
          c += t / 3 * bi;
        }
        poly = clip(poly, a, b, c);
        if (poly.empty()) break;
      }
      if (poly.size() < 3 || std::abs(area(poly)) < 1e-9) continue;
      const auto& vx = g.vertices[v];
      const char* fill = vx.side == VertexSide::Omega ? "#cfe0f5" : vx.side == VertexSide::NegOmega ? "#f5d3cf" : "#e3d3f0";
      os << "<polygon points=\"";
      double cx = 0, cy = 0;
      for (std::size_t i = 0; i < poly.size(); ++i) {
        const double px = ox + (poly[i].x + kExtent) * kScale;
        const double py = oy + (kExtent - poly[i].y) * kScale;
        cx += px;
        cy += py;
        os << (i ? " " : "") << fmt(px) << "," << fmt(py);
      }
      os << "\" fill=\"" << fill << "\" stroke=\"#333\" stroke-width=\"1\"/>\n";
      cx /= static_cast<double>(poly.size());
      cy /= static_cast<double>(poly.size());
      os << "<text x=\"" << fmt(cx) << "\" y=\"" << fmt(cy) << "\" text-anchor=\"middle\">"
         << (vx.name.empty() ? "e" : vx.name) << "</text>\n";
    }
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace dcamb
