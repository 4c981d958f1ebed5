#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "cdelab/cde.hpp"
#include "cdelab/lattice.hpp"
#include "cdelab/sl2.hpp"

namespace cdelab::tools {

enum class JobKind { verify_cde, hecke_example, osl2_duality, lift_demo };

std::string to_string(JobKind kind);
JobKind parse_job_kind(const std::string& name);

struct JobSpec {
  JobKind kind = JobKind::verify_cde;
  // verify and lift: a path to an algebra JSON file, or hecke:<type>:<q>:<cyclo>.
  std::string input;
  // hecke
  std::string type;
  std::string q;
  int cyclo = 1;
  // osl2
  std::vector<std::string> gamma;
  int depth = 0;
  bool deform = true;
  // lift: comma-separated coordinates over k, or primitive:<i> (1-based).
  std::string idempotent;
  int precision = 0;

  std::string format = "json";
  std::string output;
  bool timing = false;

  bool operator==(const JobSpec&) const = default;
};

// Checks that the parameters needed by the kind are present and in range.
// Throws InputError.
void validate(const JobSpec& spec);

struct SimpleEntry {
  std::string label;
  std::size_t dimension = 0;
  std::size_t projective_dimension = 0;
  bool operator==(const SimpleEntry&) const = default;
};

struct CdeResult {
  std::size_t dimension = 0;
  int cyclotomic_order = 1;
  std::vector<std::string> labels;
  std::vector<SimpleEntry> K_simples;
  std::vector<SimpleEntry> k_simples;
  IntMatrix D, C, E;
  std::vector<Audit> audits;
  bool passed = false;
  bool operator==(const CdeResult&) const = default;
};

struct DualityPair {
  std::string lambda;
  std::string mu;
  long lhs = 0;
  long rhs = 0;
  bool equal = false;
  bool operator==(const DualityPair&) const = default;
};

struct DualityResult {
  std::vector<std::string> gammas;
  bool deformed = true;
  int depth = 0;
  std::vector<std::string> weights;
  std::vector<DualityPair> pairs;
  bool generic_gram_nonzero = false;
  bool generic_filtration_match = false;
  bool all_equal = false;
  bool operator==(const DualityResult&) const = default;
};

struct LiftResult {
  std::vector<std::string> idempotent;
  int precision = 0;
  std::vector<std::string> coordinates;
  std::vector<int> defect_valuations;
  bool certified = false;
  bool operator==(const LiftResult&) const = default;
};

struct Report {
  JobSpec job;
  std::variant<CdeResult, DualityResult, LiftResult> result;
  std::string version;
  std::optional<double> seconds;  // only with --timing
  bool operator==(const Report&) const = default;

  // True when every audit of the payload passed.
  bool passed() const;
};

// Runs the job without throwing on audit failures; the report records them.
// Module errors propagate.
Report run_job(const JobSpec& spec);

nlohmann::json to_json(const Report& report);
Report report_from_json(const nlohmann::json& j);
std::string serialize(const Report& report);
std::string render_table(const Report& report);

// Algebra JSON schema plus an optional "simples" array of K-simples, each
// {"label": s, "actions": [d matrices of scalars]}. Throws SchemaError with a
// JSON pointer.
struct LoadedAlgebra {
  std::shared_ptr<const Algebra<RatFunc>> algebra;
  std::vector<Representation<RatFunc>> simples;
};
LoadedAlgebra load_algebra(const nlohmann::json& j);
LoadedAlgebra load_input(const std::string& input);

// Exit status for an exception escaping run_job.
int exit_code_for(const std::exception& e);

}  // namespace cdelab::tools
