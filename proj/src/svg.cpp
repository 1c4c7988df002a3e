#include "stacksort/svg.hpp"

#include <array>
#include <sstream>

#include "stacksort/errors.hpp"

namespace stacksort {

const char* hook_color(std::size_t t) {
  static constexpr std::array<const char*, 8> palette{"#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
                                                      "#8c564b", "#e377c2", "#bcbd22", "#17becf"};
  return palette[(t - 1) % palette.size()];
}

std::string render_configuration(const Permutation& p, const HookConfiguration& config) {
  const int n = static_cast<int>(p.size());
  const int side = (n + 1) * kGridPitch;
  const int legend = 30;
  const auto x_of = [](std::size_t column) { return static_cast<int>(column) * kGridPitch; };
  const auto y_of = [&](int value) { return (n + 1 - value) * kGridPitch; };

  const Coloring coloring = induced_coloring(p, config);
  const Composition q = induced_composition(p, config);

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << side << "\" height=\""
     << side + legend << "\" viewBox=\"0 0 " << side << ' ' << side + legend << "\">\n"
     << "<title>" << p.spaced() << "</title>\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  os << "<g stroke=\"#dddddd\" stroke-width=\"1\">\n";
  for (int i = 1; i <= n; ++i) {
    os << "<line x1=\"" << i * kGridPitch << "\" y1=\"" << kGridPitch / 2 << "\" x2=\"" << i * kGridPitch
       << "\" y2=\"" << side - kGridPitch / 2 << "\"/>\n";
    os << "<line x1=\"" << kGridPitch / 2 << "\" y1=\"" << i * kGridPitch << "\" x2=\"" << side - kGridPitch / 2
       << "\" y2=\"" << i * kGridPitch << "\"/>\n";
  }
  os << "</g>\n";

  for (std::size_t t = 0; t < config.hooks.size(); ++t) {
    const Hook& h = config.hooks[t];
    const int top = y_of(p.at(h.ne));
    os << "<polyline class=\"hook\" data-hook=\"" << t + 1 << "\" fill=\"none\" stroke=\"" << hook_color(t + 1)
       << "\" stroke-width=\"3\" points=\"" << x_of(h.sw) << ',' << y_of(p.at(h.sw)) << ' ' << x_of(h.sw) << ','
       << top << ' ' << x_of(h.ne) << ',' << top << "\"/>\n";
  }

  for (std::size_t x = 1; x <= p.size(); ++x) {
    const int c = coloring.colors[x - 1];
    os << "<circle class=\"point\" cx=\"" << x_of(x) << "\" cy=\"" << y_of(p.at(x)) << "\" r=\"7\" ";
    if (c == Coloring::kUncolored) {
      os << "data-color=\"none\" fill=\"white\" stroke=\"black\" stroke-width=\"2\"/>\n";
    } else if (c == Coloring::kSky) {
      os << "data-color=\"sky\" fill=\"" << kSkyColor << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    } else {
      os << "data-color=\"" << c << "\" fill=\"" << hook_color(static_cast<std::size_t>(c))
         << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    }
  }

  os << "<text x=\"" << kGridPitch / 2 << "\" y=\"" << side + legend / 2 + 5
     << "\" font-family=\"sans-serif\" font-size=\"14\">q = (";
  for (std::size_t i = 0; i < q.size(); ++i) os << (i ? "," : "") << q[i];
  os << ")</text>\n</svg>\n";
  return os.str();
}

std::vector<std::string> render_svg(const Permutation& p, std::optional<std::size_t> ordinal) {
  const auto configs = enumerate_vhc(p);
  if (configs.empty()) throw Error(ErrorKind::UnsortedPermutation, p.spaced() + " has no valid hook configuration");
  std::vector<std::string> docs;
  if (ordinal) {
    if (*ordinal < 1 || *ordinal > configs.size()) {
      throw Error(ErrorKind::MalformedInput, "configuration " + std::to_string(*ordinal) + " out of range 1.." +
                                                 std::to_string(configs.size()));
    }
    docs.push_back(render_configuration(p, configs[*ordinal - 1]));
    return docs;
  }
  for (const auto& c : configs) docs.push_back(render_configuration(p, c));
  return docs;
}

}  // namespace stacksort
