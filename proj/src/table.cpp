#include "salpeter/table.hpp"

#include <algorithm>
#include <cstdio>

#include <nlohmann/json.hpp>

namespace salpeter {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void sort_entries(std::vector<SpectrumEntry>& levels) {
  std::sort(levels.begin(), levels.end(), [](const SpectrumEntry& a, const SpectrumEntry& b) {
    const int ma = static_cast<int>(a.method);
    const int mb = static_cast<int>(b.method);
    if (ma != mb) return ma < mb;
    if (a.n != b.n) return a.n < b.n;
    if (a.two_j != b.two_j) return a.two_j < b.two_j;
    if (a.l != b.l) return a.l < b.l;
    return a.alpha < b.alpha;
  });
}

std::string to_csv(std::vector<SpectrumEntry> levels) {
  sort_entries(levels);
  std::string out =
      "method,n,l,j,two_j,alpha,binding_energy,convergence_estimate,sign\n";
  for (const auto& e : levels) {
    out += method_name(e.method);
    out += ',' + std::to_string(e.n);
    out += ',' + std::to_string(e.l);
    out += ',' + format_double(0.5 * e.two_j);
    out += ',' + std::to_string(e.two_j);
    out += ',' + format_double(e.alpha);
    out += ',' + format_double(e.binding);
    out += ',' + format_double(e.convergence_estimate);
    out += ',';
    out += sign_name(e.sign);
    out += '\n';
  }
  return out;
}

std::string to_json(const PhysicalParams& params, std::vector<SpectrumEntry> levels) {
  sort_entries(levels);
  nlohmann::ordered_json root;
  root["params"] = {{"alpha", params.alpha}, {"mass", params.mass}};
  root["levels"] = nlohmann::ordered_json::array();
  for (const auto& e : levels) {
    root["levels"].push_back({{"method", method_name(e.method)},
                              {"n", e.n},
                              {"l", e.l},
                              {"j", 0.5 * e.two_j},
                              {"two_j", e.two_j},
                              {"alpha", e.alpha},
                              {"binding_energy", e.binding},
                              {"convergence_estimate", e.convergence_estimate},
                              {"sign", sign_name(e.sign)}});
  }
  return root.dump(2) + "\n";
}

}  // namespace salpeter
