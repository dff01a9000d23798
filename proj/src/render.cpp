#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include "syslab/error.hpp"
#include "syslab/lab.hpp"

namespace syslab {

namespace {

constexpr double kScale = 40.0;
constexpr double kPad = 1.5;

std::string num(double v) {
  if (std::fabs(v) < 5e-7) v = 0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

struct Pt {
  double x = 0, y = 0;
  Pt() = default;
  Pt(double x_, double y_) : x(x_), y(y_) {}
  Pt(const PlanePoint& p) : x(p.xd()), y(p.yd()) {}  // NOLINT: drawing only needs doubles
};

std::vector<Pt> pts(const std::vector<PlanePoint>& ps) { return {ps.begin(), ps.end()}; }

struct Canvas {
  double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  std::ostringstream body;

  double sx(double x) const { return (x - min_x + kPad) * kScale; }
  double sy(double y) const { return (max_y - y + kPad) * kScale; }
  std::string pt(const Pt& p) const { return num(sx(p.x)) + "," + num(sy(p.y)); }

  void polyline(const std::vector<Pt>& pts, const std::string& style, bool closed = false) {
    body << (closed ? "<polygon" : "<polyline") << " points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) body << (i ? " " : "") << pt(pts[i]);
    body << "\" " << style << "/>\n";
  }
  void dot(const Pt& p, double r, const std::string& style) {
    body << "<circle cx=\"" << num(sx(p.x)) << "\" cy=\"" << num(sy(p.y)) << "\" r=\"" << num(r * kScale)
         << "\" " << style << "/>\n";
  }
};

Pt barycentre(const FlagComplex& c, const Simplex& s) {
  Pt sum;
  for (VertexId v : s) {
    const Pt p = embed(c.coord(v));
    sum.x += p.x;
    sum.y += p.y;
  }
  const double n = static_cast<double>(s.size());
  return {sum.x / n, sum.y / n};
}

const char* thickness_colour(int t) {
  static const char* colours[] = {"#3b6fb6", "#3b6fb6", "#e69f00", "#d55e00", "#b2182b"};
  return colours[std::min(t, 4)];
}

}  // namespace

std::string render_pipeline_svg(const FlagComplex& c, VertexId x, VertexId y) {
  if (!c.plane_backed()) throw Error(ErrorCode::NotPlaneBacked, c.name() + " has no plane coordinates to draw");
  const LayerProfile prof = layers(c, x, y);
  const EuclideanGeodesic e = euclidean_geodesic(c, x, y);

  Canvas cv;
  bool first = true;
  for (const Layer& L : prof.layers)
    for (VertexId v : L.vertices) {
      const Pt p = embed(c.coord(v));
      if (first) {
        cv.min_x = cv.max_x = p.x;
        cv.min_y = cv.max_y = p.y;
        first = false;
      }
      cv.min_x = std::min(cv.min_x, p.x);
      cv.max_x = std::max(cv.max_x, p.x);
      cv.min_y = std::min(cv.min_y, p.y);
      cv.max_y = std::max(cv.max_y, p.y);
    }
  auto inside = [&](const Pt& p) {
    return p.x >= cv.min_x - kPad && p.x <= cv.max_x + kPad && p.y >= cv.min_y - kPad && p.y <= cv.max_y + kPad;
  };

  // lattice
  cv.body << "<g id=\"lattice\" stroke=\"#dddddd\" stroke-width=\"1\">\n";
  for (std::uint32_t u = 0; u < c.size(); ++u) {
    const Pt pu = embed(c.coord(VertexId{u}));
    if (!inside(pu)) continue;
    for (VertexId w : c.neighbors(VertexId{u}))
      if (w.value > u && inside(embed(c.coord(w)))) cv.polyline({pu, embed(c.coord(w))}, "");
  }
  cv.body << "</g>\n";

  // characteristic disks and their modified versions, with the CAT(0) path
  for (std::size_t n = 0; n < e.intervals.size(); ++n) {
    const ThickInterval& iv = e.intervals[n];
    const CharDisk d = characteristic_disk(c, prof, iv);
    auto at = [&](DiskVertex dv) -> Pt {
      if (d.plane_coordinates || d.surfaces.empty()) return embed(d.coord(dv));
      return embed(c.coord(d.surfaces[0].at(dv.layer - d.j()).at(dv.pos)));
    };
    cv.body << "<g id=\"disk-" << n << "\" fill=\"#cfe8cf\" stroke=\"#8fbf8f\" stroke-width=\"1\">\n";
    for (const auto& tri : d.triangles) cv.polyline({at(tri[0]), at(tri[1]), at(tri[2])}, "", true);
    cv.body << "</g>\n";
    const ModifiedDisk md = modified_disk(d);
    cv.body << "<g id=\"modified-disk-" << n << "\">\n";
    cv.polyline(pts(md.domain.boundary), "fill=\"none\" stroke=\"#2e7d32\" stroke-width=\"1.5\" stroke-dasharray=\"4 3\"",
                true);
    cv.body << "</g>\n";
    const PolyPath alpha = shortest_path(md.domain, md.start(), md.end());
    cv.body << "<g id=\"alpha-" << n << "\">\n";
    cv.polyline(pts(alpha.points), "fill=\"none\" stroke=\"#7b3294\" stroke-width=\"2\"");
    cv.body << "</g>\n";
  }

  // directed geodesics through simplex barycentres
  std::vector<Pt> fwd, bwd;
  for (const Simplex& s : prof.sigma.simplices) fwd.push_back(barycentre(c, s));
  for (const Simplex& s : prof.tau.simplices) bwd.push_back(barycentre(c, s));
  cv.body << "<g id=\"directed\">\n";
  cv.polyline(fwd, "fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"2\"");
  cv.polyline(bwd, "fill=\"none\" stroke=\"#c0392b\" stroke-width=\"2\" stroke-dasharray=\"6 3\"");
  cv.body << "</g>\n";

  // layers coloured by thickness
  cv.body << "<g id=\"layers\">\n";
  for (const Layer& L : prof.layers)
    for (VertexId v : L.vertices)
      cv.dot(embed(c.coord(v)), 0.12, std::string("fill=\"") + thickness_colour(L.thickness) + "\"");
  cv.body << "</g>\n";

  // the Euclidean geodesic
  cv.body << "<g id=\"delta\" stroke=\"#111111\" stroke-width=\"3\" fill=\"none\">\n";
  for (const Simplex& s : e.delta) {
    const auto& vs = s.vertices();
    if (vs.size() == 1) cv.dot(embed(c.coord(vs[0])), 0.2, "");
    for (std::size_t a = 0; a < vs.size(); ++a)
      for (std::size_t b = a + 1; b < vs.size(); ++b) cv.polyline({embed(c.coord(vs[a])), embed(c.coord(vs[b]))}, "");
  }
  cv.body << "</g>\n";

  const double width = (cv.max_x - cv.min_x + 2 * kPad) * kScale;
  const double height = (cv.max_y - cv.min_y + 2 * kPad) * kScale;
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\"" << num(height)
      << "\" viewBox=\"0 0 " << num(width) << " " << num(height) << "\">\n"
      << "<title>" << c.label(x) << " to " << c.label(y) << "</title>\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n"
      << cv.body.str() << "</svg>\n";
  return out.str();
}

}  // namespace syslab
