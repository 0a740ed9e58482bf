#pragma once

// Serialization for the CLI: a versioned JSON envelope (stable key order, so
// parse -> dump round-trips byte-identically), the fixed-column CSV for
// verification sweeps, and plain-text tables. Rationals serialize as
// num/den pairs plus a 12-place decimal rendering; the pair is authoritative.

#include <string>
#include <vector>

#include "json.hpp"

#include "motzkin/density.hpp"
#include "motzkin/families.hpp"
#include "motzkin/kappa.hpp"
#include "motzkin/verify.hpp"

namespace motzkin {

using ojson = nlohmann::ordered_json;

inline constexpr const char* kFormatVersion = "1";

ojson rational_json(const Rational& r);
ojson kappa_json(const KappaResult& k);
ojson periodic_set_json(const PeriodicSet& p);
ojson density_bounds_json(const DensityBounds& b);
ojson coloring_json(const ColoringNumbers& c);
ojson family_case_json(const FamilyCase& fc);
ojson record_json(const VerificationRecord& rec);
ojson records_json(const std::vector<VerificationRecord>& recs);
ojson partition_report_json(const PartitionReport& rep);

struct Envelope {
    std::string command;
    std::vector<std::string> notes;
    ojson result;
};

std::string envelope_json(const Envelope& e);

std::string verification_csv(const std::vector<VerificationRecord>& recs);
std::string verification_table(const std::vector<VerificationRecord>& recs);

const char* family_name(Family f);
const char* status_name(RecordStatus s);

} // namespace motzkin
