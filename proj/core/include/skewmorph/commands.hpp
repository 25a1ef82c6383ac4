#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skewmorph/catalog.hpp"
#include "skewmorph/enumerate.hpp"
#include "skewmorph/skew.hpp"

namespace skewmorph {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitBound = 2;
inline constexpr int kExitCrossCheck = 3;

enum class OutFormat { Text, Json, Csv };

struct CliOptions {
  OutFormat out = OutFormat::Text;
  int max_order = 16;
  int threads = 1;
};

/// Default enumeration bound: SKEWMORPH_MAX_ORDER when set, otherwise 16.
int default_max_order();

std::optional<OutFormat> parse_out_format(const std::string& name);

/// Full invariant summary of one skew-morphism, the payload of every
/// command's record output.
struct SkewRecord {
  std::string group;
  std::vector<int> perm;
  std::vector<int> pi;
  int order = 1;
  int periodicity = 1;
  std::vector<int> kernel;
  std::vector<int> core;
  std::vector<int> fix;
  std::vector<int> smooth_subgroup;
  std::vector<std::vector<int>> orbits;
  std::map<int, std::vector<int>> orbit_pi;  // single-prime orbit subgroups
  bool smooth = false;
  bool kernel_preserving = false;
  bool automorphism = false;
};

bool operator==(const SkewRecord& a, const SkewRecord& b);

SkewRecord make_record(const SkewMorphism& s, const std::string& group_spec);
std::string record_to_json(const SkewRecord& r);
SkewRecord record_from_json(const std::string& text);

/// Analysis outcome: either a full record or the rejection witness.
struct AnalysisReport {
  std::string group;
  std::vector<int> perm;
  bool accepted = false;
  std::optional<SkewRecord> record;
  std::optional<VerifyFailure> witness;
};

bool operator==(const AnalysisReport& a, const AnalysisReport& b);

std::string report_to_json(const AnalysisReport& r);
AnalysisReport report_from_json(const std::string& text);

/// Parses "smooth", "kernel-preserving", "automorphism" or
/// "kernel=<subgroup-spec>" where the subgroup spec is one of a, a2, a2b,
/// a2ab (dihedral groups) or an explicit comma-separated element list.
EnumFilter parse_enum_filter(const GroupPtr& g, const std::string& text);

int cmd_enumerate(const std::string& group_spec, const std::optional<std::string>& filter,
                  const CliOptions& opt, std::ostream& out, std::ostream& err);

int cmd_classify(int n, bool cross_check, const CliOptions& opt, std::ostream& out,
                 std::ostream& err);

int cmd_analyze(const std::string& group_spec, const std::string& perm_text,
                const CliOptions& opt, std::ostream& out, std::ostream& err);

}  // namespace skewmorph
