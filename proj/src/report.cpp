#include "isoconst/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace isoconst::report {

using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SourceError("cannot read norm file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

const json& field(const json& doc, const char* name) {
  const auto it = doc.find(name);
  if (it == doc.end()) throw SpecError(std::string("missing field \"") + name + "\"");
  return *it;
}

double number_field(const json& v, const std::string& where) {
  if (!v.is_number()) throw SpecError("field \"" + where + "\" must be a number");
  return v.get<double>();
}

Vec2 pair_field(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 2) {
    throw SpecError("field \"" + where + "\" must be a pair [a1, a2]");
  }
  return {number_field(v[0], where), number_field(v[1], where)};
}

Record number_json(double x) {
  if (std::isfinite(x)) return round12(x);
  return format12(x);
}

std::string csv_cell(const Record& v) {
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
      if (c == '"') quoted += '"';
      quoted += c;
    }
    return quoted + "\"";
  }
  if (v.is_number_float()) return format12(v.get<double>());
  return v.dump();
}

std::string fmt(const char* pattern, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, x);
  return buf;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

const char* kind_name(RelationKind k) {
  switch (k) {
    case RelationKind::Inequality: return "inequality";
    case RelationKind::Identity: return "identity";
    case RelationKind::Classification: return "classification";
  }
  return "?";
}

std::string svg_open(int w, int h) {
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w
     << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  return os.str();
}

}  // namespace

NormSpec norm_from_json(const json& doc) {
  if (!doc.is_object()) throw SpecError("norm document must be a JSON object");
  const json& kind = field(doc, "kind");
  if (!kind.is_string()) throw SpecError("field \"kind\" must be a string");
  const auto k = kind.get<std::string>();

  if (k == "lp") {
    const json& p = field(doc, "p");
    if (p.is_string()) {
      if (p.get<std::string>() != "inf") throw SpecError("field \"p\" must be a number or \"inf\"");
      return NormSpec::linf();
    }
    return NormSpec::lp(number_field(p, "p"));
  }
  if (k == "polyhedral") {
    const json& fs = field(doc, "functionals");
    if (!fs.is_array()) throw SpecError("field \"functionals\" must be an array");
    std::vector<Vec2> functionals;
    for (const json& f : fs) functionals.push_back(pair_field(f, "functionals"));
    return NormSpec::polyhedral(std::move(functionals));
  }
  if (k == "hex_linf_l1") return NormSpec::hexagonal_mixed();
  if (k == "affine_image") {
    const NormSpec base = norm_from_json(field(doc, "base"));
    const json& m = field(doc, "matrix");
    if (!m.is_array() || m.size() != 2) throw SpecError("field \"matrix\" must be [[m11,m12],[m21,m22]]");
    const Vec2 r0 = pair_field(m[0], "matrix");
    const Vec2 r1 = pair_field(m[1], "matrix");
    Mat2 matrix;
    matrix << r0.x(), r0.y(), r1.x(), r1.y();
    return NormSpec::affine_image(base, matrix);
  }
  throw SpecError("unknown value \"" + k + "\" for field \"kind\"");
}

json norm_to_json(const NormSpec& spec) {
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, LpNorm>) {
          if (std::isinf(v.p)) return {{"kind", "lp"}, {"p", "inf"}};
          return {{"kind", "lp"}, {"p", v.p}};
        } else if constexpr (std::is_same_v<T, PolyhedralNorm>) {
          json fs = json::array();
          for (const Vec2& a : v.functionals) fs.push_back({a.x(), a.y()});
          return {{"kind", "polyhedral"}, {"functionals", fs}};
        } else if constexpr (std::is_same_v<T, HexagonalMixedNorm>) {
          return {{"kind", "hex_linf_l1"}};
        } else {
          const Mat2& m = v.matrix;
          return {{"kind", "affine_image"},
                  {"base", norm_to_json(*v.base)},
                  {"matrix", {{m(0, 0), m(0, 1)}, {m(1, 0), m(1, 1)}}}};
        }
      },
      spec.variant());
}

LabeledNorm parse_norm_text(const std::string& text, const std::string& origin) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const std::size_t upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    const std::size_t line = 1 + std::count(text.begin(), text.begin() + upto, '\n');
    const std::size_t line_start = text.rfind('\n', upto == 0 ? 0 : upto - 1);
    const std::size_t begin = line_start == std::string::npos || upto == 0 ? 0 : line_start + 1;
    const std::size_t end = std::min(text.find('\n', begin), text.size());
    std::ostringstream os;
    os << origin << ": line " << line << ", column " << (upto - begin + 1) << ": " << e.what()
       << "\n  " << text.substr(begin, end - begin);
    throw ParseError(os.str());
  }
  std::string label = origin;
  if (doc.is_object() && doc.contains("label") && doc["label"].is_string()) {
    label = doc["label"].get<std::string>();
  }
  try {
    return {label, norm_from_json(doc)};
  } catch (const SpecError& e) {
    throw SpecError(origin + ": " + e.what());
  }
}

LabeledNorm parse_norm_file(const std::string& path) {
  const std::string stem = path.substr(path.find_last_of('/') + 1);
  auto parsed = parse_norm_text(slurp(path), path);
  if (parsed.first == path) parsed.first = stem.substr(0, stem.rfind('.'));
  return parsed;
}

bool is_builtin(const std::string& source) { return source.rfind("builtin:", 0) == 0; }

LabeledNorm builtin_norm(const std::string& source) {
  const std::string name = is_builtin(source) ? source.substr(8) : source;
  if (name == "l1") return {"l1", NormSpec::lp(1.0)};
  if (name == "l2") return {"l2", NormSpec::lp(2.0)};
  if (name == "linf") return {"linf", NormSpec::linf()};
  if (name == "hex") return {"hex", NormSpec::hexagonal_mixed()};
  if (name.rfind("lp?p=", 0) == 0) {
    const std::string value = name.substr(5);
    if (value == "inf") return {"lp(inf)", NormSpec::linf()};
    std::size_t used = 0;
    double p = 0.0;
    try {
      p = std::stod(value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != value.size()) throw SourceError("bad p value in '" + source + "'");
    return {"lp(" + value + ")", NormSpec::lp(p)};
  }
  throw SourceError("unknown builtin norm '" + source + "'");
}

LabeledNorm resolve_norm_source(const std::string& source) {
  return is_builtin(source) ? builtin_norm(source) : parse_norm_file(source);
}

std::vector<std::string> builtin_labels() {
  return {"builtin:l1", "builtin:l2", "builtin:linf", "builtin:lp?p=<v>", "builtin:hex"};
}

double round12(double x) {
  if (!std::isfinite(x)) return x;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

std::string format12(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return fmt("%.12g", x);
}

Record estimate_record(const std::string& norm_label, const Estimate& e) {
  Record r;
  r["norm"] = norm_label;
  r["constant"] = e.constant.name();
  r["param"] = e.constant.has_param() ? number_json(e.constant.param) : Record(nullptr);
  r["value"] = number_json(e.value);
  r["direction"] = e.direction == Direction::Supremum ? "sup" : "inf";
  r["witness_x1"] = number_json(e.witness.x.x());
  r["witness_x2"] = number_json(e.witness.x.y());
  r["witness_y1"] = number_json(e.witness.y.x());
  r["witness_y2"] = number_json(e.witness.y.y());
  r["witness_radius"] = number_json(e.witness.radius);
  r["witness_aux"] = number_json(e.witness.aux);
  r["witness_residual"] = number_json(e.witness.residual);
  r["grid"] = e.grid_size;
  r["refine_tol"] = number_json(e.refine_tol);
  return r;
}

Record relation_record(const RelationReport& rep) {
  Record r;
  r["norm"] = rep.norm_label;
  r["relation"] = rep.relation_id;
  r["kind"] = kind_name(rep.kind);
  r["lhs"] = number_json(rep.lhs);
  r["rhs"] = number_json(rep.rhs);
  r["slack"] = number_json(rep.slack);
  r["tolerance"] = number_json(rep.tolerance);
  r["asserted"] = rep.asserted;
  r["pass"] = rep.pass;
  r["error"] = rep.error;
  return r;
}

Record sweep_record(const std::string& parameter_name, const SweepRow& row) {
  Record r;
  r[parameter_name] = number_json(row.parameter);
  r["value"] = number_json(row.value);
  return r;
}

std::string to_json_text(const std::vector<Record>& records) {
  if (records.size() == 1) return records.front().dump(2) + "\n";
  return Record(records).dump(2) + "\n";
}

std::string to_csv_text(const std::vector<Record>& records) {
  if (records.empty()) return "";
  std::ostringstream os;
  bool first = true;
  for (const auto& item : records.front().items()) {
    os << (first ? "" : ",") << item.key();
    first = false;
  }
  os << '\n';
  for (const Record& rec : records) {
    first = true;
    for (const auto& item : rec.items()) {
      os << (first ? "" : ",") << (item.value().is_null() ? "" : csv_cell(item.value()));
      first = false;
    }
    os << '\n';
  }
  return os.str();
}

std::string relation_table(const std::vector<RelationReport>& reports) {
  std::ostringstream os;
  char line[256];
  std::snprintf(line, sizeof line, "%-16s %-22s %12s %12s %12s %10s  %s\n", "norm", "relation",
                "lhs", "rhs", "slack", "tolerance", "result");
  os << line;
  for (const RelationReport& r : reports) {
    const char* verdict = r.pass ? "pass" : (r.asserted ? "FAIL" : "fail (info)");
    std::snprintf(line, sizeof line, "%-16s %-22s %12.6f %12.6f %12.6f %10.1e  %s\n",
                  r.norm_label.c_str(), r.relation_id.c_str(), r.lhs, r.rhs, r.slack,
                  r.tolerance, verdict);
    os << line;
    if (!r.error.empty()) os << "    error: " << r.error << '\n';
  }
  return os.str();
}

std::vector<SweepRow> parse_sweep_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<SweepRow> rows;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw ParseError("sweep data line without a comma: " + line);
    try {
      rows.push_back({std::stod(line.substr(0, comma)), std::stod(line.substr(comma + 1))});
    } catch (const std::exception&) {
      throw ParseError("sweep data line is not numeric: " + line);
    }
  }
  if (rows.empty()) throw ParseError("sweep data has no rows");
  return rows;
}

std::string svg_unit_ball(const NormSpec& spec, const std::string& title,
                          const std::optional<Witness>& witness) {
  std::vector<Vec2> pts;
  pts.reserve(kOutlineSamples);
  double extent = 1.0;
  for (int k = 0; k < kOutlineSamples; ++k) {
    pts.push_back(unit_point_at(spec, k, kOutlineSamples).coords);
    extent = std::max(extent, pts.back().cwiseAbs().maxCoeff());
  }
  const int size = 520;
  const double c = size / 2.0;
  const double s = (size / 2.0 - 50.0) / extent;
  auto X = [&](double x) { return fmt("%.3f", c + s * x); };
  auto Y = [&](double y) { return fmt("%.3f", c - s * y); };

  std::ostringstream os;
  os << svg_open(size, size);
  os << "<title>" << xml_escape(title) << "</title>\n";
  os << "<defs><marker id=\"head\" markerWidth=\"8\" markerHeight=\"8\" refX=\"7\" refY=\"4\" "
        "orient=\"auto\"><path d=\"M0,0 L8,4 L0,8 z\" fill=\"#c0392b\"/></marker></defs>\n";
  os << "<line x1=\"20\" y1=\"" << c << "\" x2=\"" << size - 20 << "\" y2=\"" << c
     << "\" stroke=\"#999\" stroke-width=\"1\"/>\n";
  os << "<line x1=\"" << c << "\" y1=\"20\" x2=\"" << c << "\" y2=\"" << size - 20
     << "\" stroke=\"#999\" stroke-width=\"1\"/>\n";
  os << "<polygon fill=\"#eaf2fb\" stroke=\"#1f4e79\" stroke-width=\"2\" points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    os << (i ? " " : "") << X(pts[i].x()) << ',' << Y(pts[i].y());
  }
  os << "\"/>\n";
  if (witness) {
    const std::pair<const char*, Vec2> vs[] = {{"x", witness->x}, {"y", witness->y}};
    for (const auto& [name, v] : vs) {
      os << "<line x1=\"" << c << "\" y1=\"" << c << "\" x2=\"" << X(v.x()) << "\" y2=\""
         << Y(v.y()) << "\" stroke=\"#c0392b\" stroke-width=\"2\" marker-end=\"url(#head)\"/>\n";
      os << "<text x=\"" << X(v.x() * 1.08) << "\" y=\"" << Y(v.y() * 1.08)
         << "\" font-family=\"sans-serif\" font-size=\"13\" fill=\"#c0392b\">" << name << " ("
         << fmt("%.4g", v.x()) << ", " << fmt("%.4g", v.y()) << ")</text>\n";
    }
  }
  os << "<text x=\"12\" y=\"20\" font-family=\"sans-serif\" font-size=\"14\">"
     << xml_escape(title) << "</text>\n";
  os << "</svg>\n";
  return os.str();
}

std::string svg_sweep(const std::vector<SweepRow>& rows, const std::string& x_label,
                      const std::string& y_label) {
  if (rows.empty()) throw std::invalid_argument("sweep plot needs at least one row");
  std::vector<SweepRow> finite;
  std::copy_if(rows.begin(), rows.end(), std::back_inserter(finite), [](const SweepRow& r) {
    return std::isfinite(r.parameter) && std::isfinite(r.value);
  });
  if (finite.empty()) throw std::invalid_argument("sweep plot has no finite rows");
  auto [xmin_it, xmax_it] = std::minmax_element(
      finite.begin(), finite.end(), [](auto& a, auto& b) { return a.parameter < b.parameter; });
  auto [ymin_it, ymax_it] = std::minmax_element(
      finite.begin(), finite.end(), [](auto& a, auto& b) { return a.value < b.value; });
  double x0 = xmin_it->parameter, x1 = xmax_it->parameter;
  double y0 = ymin_it->value, y1 = ymax_it->value;
  if (x1 - x0 <= 0.0) x1 = x0 + 1.0;
  if (y1 - y0 <= 1e-12) {
    y0 -= 0.5;
    y1 += 0.5;
  }
  const int w = 640, h = 420, left = 70, right = 20, top = 30, bottom = 60;
  auto X = [&](double x) { return left + (w - left - right) * (x - x0) / (x1 - x0); };
  auto Y = [&](double y) { return h - bottom - (h - top - bottom) * (y - y0) / (y1 - y0); };

  std::ostringstream os;
  os << svg_open(w, h);
  os << "<title>" << xml_escape(y_label) << " vs " << xml_escape(x_label) << "</title>\n";
  os << "<g font-family=\"sans-serif\" font-size=\"11\">\n";
  os << "<line x1=\"" << left << "\" y1=\"" << h - bottom << "\" x2=\"" << w - right << "\" y2=\""
     << h - bottom << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\""
     << h - bottom << "\" stroke=\"black\"/>\n";
  constexpr int kTicks = 5;
  for (int i = 0; i <= kTicks; ++i) {
    const double xv = x0 + (x1 - x0) * i / kTicks;
    const double yv = y0 + (y1 - y0) * i / kTicks;
    const std::string px = fmt("%.2f", X(xv));
    const std::string py = fmt("%.2f", Y(yv));
    os << "<line x1=\"" << px << "\" y1=\"" << h - bottom << "\" x2=\"" << px << "\" y2=\""
       << h - bottom + 5 << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << px << "\" y=\"" << h - bottom + 18 << "\" text-anchor=\"middle\">"
       << fmt("%.4g", xv) << "</text>\n";
    os << "<line x1=\"" << left - 5 << "\" y1=\"" << py << "\" x2=\"" << left << "\" y2=\"" << py
       << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << left - 8 << "\" y=\"" << py << "\" text-anchor=\"end\" dy=\"4\">"
       << fmt("%.4g", yv) << "</text>\n";
  }
  os << "<text x=\"" << (left + w - right) / 2 << "\" y=\"" << h - 15
     << "\" text-anchor=\"middle\" font-size=\"13\">" << xml_escape(x_label) << "</text>\n";
  os << "<text x=\"18\" y=\"" << (top + h - bottom) / 2 << "\" text-anchor=\"middle\" "
     << "font-size=\"13\" transform=\"rotate(-90 18 " << (top + h - bottom) / 2 << ")\">"
     << xml_escape(y_label) << "</text>\n";
  os << "</g>\n<polyline fill=\"none\" stroke=\"#1f4e79\" stroke-width=\"2\" points=\"";
  for (std::size_t i = 0; i < finite.size(); ++i) {
    os << (i ? " " : "") << fmt("%.2f", X(finite[i].parameter)) << ','
       << fmt("%.2f", Y(finite[i].value));
  }
  os << "\"/>\n</svg>\n";
  return os.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& console) {
  if (path.empty() || path == "-") {
    console << text;
    console.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw SourceError("cannot open '" + path + "' for writing");
  out << text;
  if (!out.flush()) throw SourceError("write to '" + path + "' failed");
}

}  // namespace isoconst::report
