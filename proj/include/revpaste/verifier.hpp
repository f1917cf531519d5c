#pragma once

#include <cstdint>
#include <functional>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "revpaste/matrix.hpp"

namespace rp {

/// Where and how a law is checked: which exact field, which shape
/// parameters, and whether cases are enumerated exhaustively or drawn from
/// the seeded counter generator.
struct DomainSpec {
    FieldTag field = FieldTag::prime_field(3);
    std::size_t n = 0;  // 0 = use the law's default shape parameters
    std::size_t m = 0;
    enum class Strategy { Exhaustive, Random } strategy = Strategy::Exhaustive;
    std::uint64_t trials = 200;
    std::uint64_t seed = 0;
    std::uint64_t budget = 10'000'000;
};

enum class LawClass { Proved, Refuted, Conditional };
enum class LawStatus { Pass, Fail, Skipped };

struct LawReport {
    std::string law;
    DomainSpec domain;
    std::uint64_t cases_checked = 0;
    LawStatus status = LawStatus::Skipped;
    std::string skip_reason;
    std::optional<nlohmann::json> witness;  // present iff status == Fail
};

struct Shape {
    std::size_t rows, cols;  // vectors are 1 x len, scalars 1 x 1
};

/// One cataloged identity.  The predicate sees the enumerated objects in
/// shape order and returns whether the law holds on that case (vacuously
/// true when its hypothesis is not met).
struct Law {
    std::string id;
    std::string alias;
    std::string statement;
    LawClass cls = LawClass::Proved;
    std::size_t default_n = 3, default_m = 2;
    std::function<std::vector<Shape>(std::size_t n, std::size_t m)> shapes;
    std::function<bool(const std::vector<Matrix>&, const FieldTag&, std::size_t n, std::size_t m)>
        holds;
};

const std::vector<Law>& law_catalog();
const Law& find_law(const std::string& id_or_alias);  // throws UnknownLaw

LawReport check_law(const std::string& id_or_alias, const DomainSpec& domain);

// First witness in enumeration order, or nullopt if none within bounds.
std::optional<nlohmann::json> find_counterexample(const std::string& id_or_alias,
                                                  const DomainSpec& bounds);

// Every law at its default desk-scale shapes over the given field.
std::vector<LawReport> run_suite(const DomainSpec& defaults);

// Pass iff proved/conditional laws pass and refuted laws fail as expected.
bool suite_ok(const std::vector<LawReport>& reports);

nlohmann::json report_to_json(const LawReport& r);
std::string summary_table(const std::vector<LawReport>& reports);

// Counter-based generator behind random strategy: value i of a run is
// splitmix64(seed + i).  Documented so independent implementations can
// reproduce case sequences.
std::uint64_t splitmix64(std::uint64_t x);

}  // namespace rp
