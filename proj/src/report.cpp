#include "holoreg/report.hpp"

namespace holoreg {

Report& Report::add(std::string key, std::string value) {
  lines_.emplace_back(std::move(key), std::move(value));
  return *this;
}

Report& Report::add(std::string key, std::size_t value) { return add(std::move(key), std::to_string(value)); }

Report& Report::add(std::string key, bool value) {
  return add(std::move(key), std::string(value ? "true" : "false"));
}

std::string Report::str() const {
  std::string out;
  for (const auto& [k, v] : lines_) out += k + ": " + v + "\n";
  return out;
}

std::string format_hol_element(const FiniteGroup& n, const HolElement& h) {
  std::string out = "translation=" + n.label_string(h.translation) + " twist=[";
  bool first = true;
  for (Elem g : minimal_generating_set(n)) {
    if (!first) out += ',';
    first = false;
    out += n.label_string(g) + "->" + n.label_string(h.twist[static_cast<std::size_t>(g)]);
  }
  return out + "]";
}

Report verdict_report(const std::string& spec, const FiniteGroup& n, const Verdict& v) {
  Report r;
  r.add("group", spec).add("order", n.order()).add("realizable", v.realizable).add("reason", to_string(v.reason));
  if (v.decomposition) {
    const auto& d = *v.decomposition;
    r.add("e", std::to_string(d.presentation.e()))
        .add("d", std::to_string(d.presentation.d()))
        .add("k", std::to_string(d.presentation.k()))
        .add("P_kind", to_string(d.p_kind))
        .add("m", d.m)
        .add("alpha_image_order", d.alpha_image_order);
  } else {
    r.add("decomposition", std::string("none"));
  }
  r.add("witness", v.witness ? format_hol_element(n, *v.witness) : std::string("none"));
  return r;
}

}  // namespace holoreg
