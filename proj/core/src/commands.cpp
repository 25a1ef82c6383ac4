#include "skewmorph/commands.hpp"

#include <cstdlib>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "skewmorph/cycles.hpp"

namespace skewmorph {

namespace {

using nlohmann::json;

bool is_prime_int(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::string join(const std::vector<int>& v, char sep) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

std::string set_text(const std::vector<int>& v) { return "{" + join(v, ',') + "}"; }

json orbit_pi_to_json(const std::map<int, std::vector<int>>& m) {
  json obj = json::object();
  for (const auto& [p, elems] : m) obj[std::to_string(p)] = elems;
  return obj;
}

std::map<int, std::vector<int>> orbit_pi_from_json(const json& obj) {
  std::map<int, std::vector<int>> out;
  for (auto it = obj.begin(); it != obj.end(); ++it)
    out[std::stoi(it.key())] = it.value().get<std::vector<int>>();
  return out;
}

json record_to_json_value(const SkewRecord& r) {
  return json{{"group", r.group},
              {"perm", r.perm},
              {"pi", r.pi},
              {"order", r.order},
              {"periodicity", r.periodicity},
              {"kernel", r.kernel},
              {"core", r.core},
              {"fix", r.fix},
              {"smooth_subgroup", r.smooth_subgroup},
              {"orbits", r.orbits},
              {"orbit_pi", orbit_pi_to_json(r.orbit_pi)},
              {"smooth", r.smooth},
              {"kernel_preserving", r.kernel_preserving},
              {"automorphism", r.automorphism}};
}

SkewRecord record_from_json_value(const json& j) {
  SkewRecord r;
  r.group = j.at("group").get<std::string>();
  r.perm = j.at("perm").get<std::vector<int>>();
  r.pi = j.at("pi").get<std::vector<int>>();
  r.order = j.at("order").get<int>();
  r.periodicity = j.at("periodicity").get<int>();
  r.kernel = j.at("kernel").get<std::vector<int>>();
  r.core = j.at("core").get<std::vector<int>>();
  r.fix = j.at("fix").get<std::vector<int>>();
  r.smooth_subgroup = j.at("smooth_subgroup").get<std::vector<int>>();
  r.orbits = j.at("orbits").get<std::vector<std::vector<int>>>();
  r.orbit_pi = orbit_pi_from_json(j.at("orbit_pi"));
  r.smooth = j.at("smooth").get<bool>();
  r.kernel_preserving = j.at("kernel_preserving").get<bool>();
  r.automorphism = j.at("automorphism").get<bool>();
  return r;
}

void print_record_text(const SkewRecord& r, std::ostream& out) {
  out << "  perm: " << format_cycles(r.perm) << "\n";
  out << "  order: " << r.order << "  periodicity: " << r.periodicity << "\n";
  out << "  pi: [" << join(r.pi, ',') << "]\n";
  out << "  kernel: " << set_text(r.kernel) << "  core: " << set_text(r.core)
      << "  fix: " << set_text(r.fix) << "\n";
  out << "  smooth subgroup: " << set_text(r.smooth_subgroup) << "\n";
  out << "  flags: smooth=" << (r.smooth ? "yes" : "no")
      << " kernel-preserving=" << (r.kernel_preserving ? "yes" : "no")
      << " automorphism=" << (r.automorphism ? "yes" : "no") << "\n";
  for (const auto& [p, elems] : r.orbit_pi)
    out << "  orbit subgroup for prime " << p << ": " << set_text(elems) << "\n";
}

const char* kRecordCsvHeader =
    "group,order,periodicity,smooth,kernel_preserving,automorphism,perm,pi,kernel\n";

void print_record_csv(const SkewRecord& r, std::ostream& out) {
  out << r.group << ',' << r.order << ',' << r.periodicity << ',' << r.smooth << ','
      << r.kernel_preserving << ',' << r.automorphism << ',' << join(r.perm, ';') << ','
      << join(r.pi, ';') << ',' << join(r.kernel, ';') << "\n";
}

}  // namespace

int default_max_order() {
  if (const char* env = std::getenv("SKEWMORPH_MAX_ORDER")) {
    try {
      const int v = std::stoi(env);
      if (v >= 1) return v;
    } catch (const std::exception&) {
    }
  }
  return 16;
}

std::optional<OutFormat> parse_out_format(const std::string& name) {
  if (name == "text") return OutFormat::Text;
  if (name == "json") return OutFormat::Json;
  if (name == "csv") return OutFormat::Csv;
  return std::nullopt;
}

bool operator==(const SkewRecord& a, const SkewRecord& b) {
  return a.group == b.group && a.perm == b.perm && a.pi == b.pi && a.order == b.order &&
         a.periodicity == b.periodicity && a.kernel == b.kernel && a.core == b.core &&
         a.fix == b.fix && a.smooth_subgroup == b.smooth_subgroup && a.orbits == b.orbits &&
         a.orbit_pi == b.orbit_pi && a.smooth == b.smooth &&
         a.kernel_preserving == b.kernel_preserving && a.automorphism == b.automorphism;
}

SkewRecord make_record(const SkewMorphism& s, const std::string& group_spec) {
  SkewRecord r;
  r.group = group_spec;
  r.perm = s.phi;
  r.pi = s.pi;
  r.order = s.order;
  r.periodicity = periodicity(s);
  r.kernel = kernel(s).elements;
  r.core = core(s).elements;
  r.fix = fix_subgroup(s).elements;
  r.smooth_subgroup = smooth_subgroup(s).elements;
  r.orbits = orbits(s).cycles;
  for (int p = 2; p <= s.group->order(); ++p)
    if (is_prime_int(p)) r.orbit_pi[p] = orbit_pi_subgroup(s, {p}).elements;
  r.smooth = is_smooth(s);
  r.kernel_preserving = is_kernel_preserving(s);
  r.automorphism = is_automorphism(s);
  return r;
}

std::string record_to_json(const SkewRecord& r) { return record_to_json_value(r).dump(2); }

SkewRecord record_from_json(const std::string& text) {
  return record_from_json_value(json::parse(text));
}

bool operator==(const AnalysisReport& a, const AnalysisReport& b) {
  if (a.group != b.group || a.perm != b.perm || a.accepted != b.accepted) return false;
  if (a.record.has_value() != b.record.has_value()) return false;
  if (a.record && !(*a.record == *b.record)) return false;
  if (a.witness.has_value() != b.witness.has_value()) return false;
  if (a.witness && (a.witness->x != b.witness->x || a.witness->y != b.witness->y ||
                    a.witness->reason != b.witness->reason))
    return false;
  return true;
}

std::string report_to_json(const AnalysisReport& r) {
  json j{{"group", r.group}, {"perm", r.perm}, {"accepted", r.accepted}};
  j["record"] = r.record ? record_to_json_value(*r.record) : json(nullptr);
  j["witness"] = r.witness ? json{{"x", r.witness->x},
                                  {"y", r.witness->y},
                                  {"reason", r.witness->reason}}
                           : json(nullptr);
  return j.dump(2);
}

AnalysisReport report_from_json(const std::string& text) {
  const json j = json::parse(text);
  AnalysisReport r;
  r.group = j.at("group").get<std::string>();
  r.perm = j.at("perm").get<std::vector<int>>();
  r.accepted = j.at("accepted").get<bool>();
  if (!j.at("record").is_null()) r.record = record_from_json_value(j.at("record"));
  if (!j.at("witness").is_null()) {
    VerifyFailure w;
    w.x = j.at("witness").at("x").get<int>();
    w.y = j.at("witness").at("y").get<int>();
    w.reason = j.at("witness").at("reason").get<std::string>();
    r.witness = w;
  }
  return r;
}

EnumFilter parse_enum_filter(const GroupPtr& g, const std::string& text) {
  if (text == "smooth") return EnumFilter::smooth();
  if (text == "kernel-preserving") return EnumFilter::kernel_preserving();
  if (text == "automorphism") return EnumFilter::automorphism();
  if (text.rfind("kernel=", 0) == 0) {
    const std::string spec = text.substr(7);
    Subgroup sub = [&] {
      if (spec == "a") return dihedral_rotations(g);
      if (spec == "a2") return dihedral_even_rotations(g);
      if (spec == "a2b") return dihedral_even_and_b(g);
      if (spec == "a2ab") return dihedral_even_and_ab(g);
      std::vector<int> elems;
      std::stringstream ss(spec);
      std::string item;
      while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        elems.push_back(std::stoi(item));
      }
      if (elems.empty()) throw std::invalid_argument("empty subgroup spec");
      return Subgroup::make(g, std::move(elems));
    }();
    return EnumFilter::kernel_equals(sub.elements);
  }
  throw std::invalid_argument("unknown filter: " + text);
}

int cmd_enumerate(const std::string& group_spec, const std::optional<std::string>& filter,
                  const CliOptions& opt, std::ostream& out, std::ostream& err) {
  GroupPtr g;
  std::optional<EnumFilter> f;
  try {
    g = FiniteGroup::from_spec(group_spec);
    if (filter) f = parse_enum_filter(g, *filter);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  EnumConfig cfg;
  cfg.max_group_order = opt.max_order;
  cfg.threads = opt.threads;
  std::vector<SkewMorphism> found;
  try {
    found = f ? enumerate_with_filter(g, cfg, *f) : enumerate_skew_morphisms(g, cfg);
  } catch (const bound_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitBound;
  }

  switch (opt.out) {
    case OutFormat::Json: {
      json records = json::array();
      for (const SkewMorphism& s : found)
        records.push_back(record_to_json_value(make_record(s, group_spec)));
      out << json{{"group", group_spec},
                  {"count", found.size()},
                  {"records", records}}
                 .dump(2)
          << "\n";
      break;
    }
    case OutFormat::Csv: {
      out << kRecordCsvHeader;
      for (const SkewMorphism& s : found) print_record_csv(make_record(s, group_spec), out);
      break;
    }
    case OutFormat::Text: {
      out << "group: " << group_spec << "\ncount: " << found.size() << "\n";
      int idx = 0;
      for (const SkewMorphism& s : found) {
        out << "record " << idx++ << ":\n";
        print_record_text(make_record(s, group_spec), out);
      }
      break;
    }
  }
  return kExitOk;
}

int cmd_classify(int n, bool cross_check, const CliOptions& opt, std::ostream& out,
                 std::ostream& err) {
  if (n < 3) {
    err << "error: classification needs n >= 3\n";
    return kExitUsage;
  }
  EnumConfig cfg;
  cfg.max_group_order = opt.max_order;
  cfg.threads = opt.threads;
  if (cross_check && 2 * n > cfg.max_group_order) {
    err << "error: cross-check needs group order 2n = " << 2 * n
        << " within the enumeration bound " << cfg.max_group_order << "\n";
    return kExitBound;
  }

  const Catalog catalog = classify_smooth(n, cfg);
  std::optional<CrossCheckReport> check;
  if (cross_check) check = cross_check_catalog(catalog, cfg);

  switch (opt.out) {
    case OutFormat::Json: {
      json payload = json::parse(catalog_to_json(catalog));
      if (check) {
        json classes = json::array();
        for (const CrossCheckClass& cls : check->classes)
          classes.push_back({{"kernel", cls.name},
                             {"matched", cls.matched},
                             {"only_oracle", cls.only_oracle},
                             {"only_catalog", cls.only_catalog}});
        payload = json{{"catalog", payload},
                       {"cross_check",
                        {{"pass", check->pass},
                         {"oracle_total", check->oracle_total},
                         {"catalog_total", check->catalog_total},
                         {"classes", classes}}}};
      }
      out << payload.dump(2) << "\n";
      break;
    }
    case OutFormat::Csv: {
      out << "n,provenance,r,s,u,e,f,k,order,perm,pi,kernel,smooth\n";
      for (const CatalogRecord& rec : catalog.records) {
        out << catalog.n << ',' << provenance_name(rec.primary.provenance) << ',';
        if (rec.primary.params) {
          const ParamTuple& t = *rec.primary.params;
          out << t.r << ',' << t.s << ',' << t.u << ',' << t.e << ','
              << (t.f ? std::to_string(*t.f) : "") << ',' << t.k << ',';
        } else {
          out << ",,,,,,";
        }
        out << rec.skew.order << ',' << join(rec.skew.phi, ';') << ','
            << join(rec.skew.pi, ';') << ',' << join(kernel(rec.skew).elements, ';') << ','
            << 1 << "\n";
      }
      break;
    }
    case OutFormat::Text: {
      out << "n: " << n << "\nrecords: " << catalog.records.size() << "\n";
      int idx = 0;
      for (const CatalogRecord& rec : catalog.records) {
        out << "record " << idx++ << ": provenance=" << provenance_name(rec.primary.provenance);
        if (rec.primary.params) {
          const ParamTuple& t = *rec.primary.params;
          out << " params=(r=" << t.r << ",s=" << t.s << ",u=" << t.u << ",e=" << t.e;
          if (t.f) out << ",f=" << *t.f;
          out << ",k=" << t.k << ")";
        }
        out << " order=" << rec.skew.order << " kernel=" << set_text(kernel(rec.skew).elements)
            << " perm=" << format_cycles(rec.skew.phi);
        if (!rec.collisions.empty())
          out << " (also produced " << rec.collisions.size() << " more time(s))";
        out << "\n";
      }
      break;
    }
  }

  if (check) {
    if (opt.out != OutFormat::Json) {
      out << "cross-check: " << (check->pass ? "PASS" : "FAIL") << " (oracle "
          << check->oracle_total << ", catalog " << check->catalog_total << ")\n";
      for (const CrossCheckClass& cls : check->classes) {
        if (cls.only_oracle.empty() && cls.only_catalog.empty()) continue;
        out << "  kernel class " << cls.name << ": " << cls.only_oracle.size()
            << " only in oracle, " << cls.only_catalog.size() << " only in catalog\n";
        for (const auto& perm : cls.only_oracle)
          out << "    oracle-only: " << format_cycles(perm) << "\n";
        for (const auto& perm : cls.only_catalog)
          out << "    catalog-only: " << format_cycles(perm) << "\n";
      }
    }
    if (!check->pass) return kExitCrossCheck;
  }
  return kExitOk;
}

int cmd_analyze(const std::string& group_spec, const std::string& perm_text,
                const CliOptions& opt, std::ostream& out, std::ostream& err) {
  GroupPtr g;
  std::vector<int> perm;
  try {
    g = FiniteGroup::from_spec(group_spec);
    perm = parse_cycles(perm_text, g->order());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  AnalysisReport report;
  report.group = group_spec;
  report.perm = perm;
  const VerifyResult res = verify(g, perm);
  report.accepted = accepted(res);
  if (report.accepted)
    report.record = make_record(skew_of(res), group_spec);
  else
    report.witness = failure_of(res);

  switch (opt.out) {
    case OutFormat::Json:
      out << report_to_json(report) << "\n";
      break;
    case OutFormat::Csv:
      if (report.record) {
        out << kRecordCsvHeader;
        print_record_csv(*report.record, out);
      } else {
        out << "accepted,x,y,reason\n0," << report.witness->x << ',' << report.witness->y
            << ',' << report.witness->reason << "\n";
      }
      break;
    case OutFormat::Text:
      out << "group: " << group_spec << "\n";
      out << "perm: " << format_cycles(perm) << "\n";
      out << "accepted: " << (report.accepted ? "yes" : "no") << "\n";
      if (report.record) print_record_text(*report.record, out);
      if (report.witness)
        out << "  witness: x=" << report.witness->x << " y=" << report.witness->y << " ("
            << report.witness->reason << ")\n";
      break;
  }
  return kExitOk;
}

}  // namespace skewmorph
