#include "hesslab/export.hpp"

#include <array>
#include <iomanip>
#include <sstream>

namespace hesslab {

namespace {

constexpr std::array<const char*, 8> kDepthColors{"#1b9e77", "#d95f02", "#7570b3", "#e7298a",
                                                  "#66a61e", "#e6ab02", "#a6761d", "#666666"};

std::string format(double v) {
  std::ostringstream os;
  os << std::setprecision(10) << (v == 0 ? 0.0 : v);
  return os.str();
}

}  // namespace

std::string trace_to_svg(const TraceResult& trace, const NestingForest& forest) {
  const double xmin = trace.bbox.xmin.get_d();
  const double ymax = trace.bbox.ymax.get_d();
  const double width = Rational(trace.bbox.xmax - trace.bbox.xmin).get_d();
  const double height = Rational(trace.bbox.ymax - trace.bbox.ymin).get_d();
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << format(xmin) << ' ' << format(-ymax) << ' '
     << format(width) << ' ' << format(height) << "\" width=\"600\" height=\""
     << format(600 * height / width) << "\">\n"
     << "  <rect x=\"" << format(xmin) << "\" y=\"" << format(-ymax) << "\" width=\"" << format(width)
     << "\" height=\"" << format(height) << "\" fill=\"white\"/>\n";
  const double stroke = std::max(width, height) / 300;
  for (std::size_t k = 0; k < trace.components.size(); ++k) {
    const auto& c = trace.components[k];
    const int depth = forest.depth(static_cast<int>(k));
    os << "  <path data-component=\"" << k << "\" data-depth=\"" << depth << "\" fill=\"none\" stroke=\""
       << kDepthColors[depth % kDepthColors.size()] << "\" stroke-width=\"" << format(stroke) << "\" d=\"";
    for (std::size_t i = 0; i < c.polyline.size(); ++i) {
      os << (i == 0 ? "M" : " L") << format(c.polyline[i].x) << ',' << format(-c.polyline[i].y);
    }
    if (c.closed) os << " Z";
    os << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string trace_to_csv(const TraceResult& trace, const NestingForest& forest) {
  std::ostringstream os;
  os << "component,depth,closed,vertex,x,y\n";
  for (std::size_t k = 0; k < trace.components.size(); ++k) {
    const auto& c = trace.components[k];
    const int depth = forest.depth(static_cast<int>(k));
    for (std::size_t i = 0; i < c.polyline.size(); ++i) {
      os << k << ',' << depth << ',' << (c.closed ? 1 : 0) << ',' << i << ',' << format(c.polyline[i].x) << ','
         << format(c.polyline[i].y) << '\n';
    }
  }
  return os.str();
}

}  // namespace hesslab
