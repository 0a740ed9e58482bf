#include "motzkin/report.hpp"

#include <iomanip>
#include <sstream>

namespace motzkin {

const char* family_name(Family f) {
    return f == Family::F1 ? "f1" : "f2";
}

const char* status_name(RecordStatus s) {
    switch (s) {
        case RecordStatus::Verified: return "verified";
        case RecordStatus::Uncovered: return "uncovered";
        case RecordStatus::Degenerate: return "degenerate";
    }
    return "?";
}

ojson rational_json(const Rational& r) {
    ojson j;
    j["num"] = r.num();
    j["den"] = r.den();
    j["decimal"] = r.decimal();
    return j;
}

ojson kappa_json(const KappaResult& k) {
    ojson j;
    j["value"] = rational_json(k.value);
    j["witness_c"] = k.witness_c;
    j["witness_m"] = k.witness_m;
    j["achieved_d"] = k.achieved_d;
    return j;
}

ojson periodic_set_json(const PeriodicSet& p) {
    ojson j;
    j["period"] = p.period;
    j["pattern"] = p.pattern_string();
    j["density"] = rational_json(p.density);
    j["selected"] = p.selected();
    return j;
}

ojson density_bounds_json(const DensityBounds& b) {
    ojson j;
    j["lower"] = rational_json(b.lower);
    j["lower_method"] = b.lower_method;
    j["upper"] = rational_json(b.upper);
    j["upper_method"] = b.upper_method;
    j["upper_k"] = b.upper_k;
    if (b.exact) {
        j["exact"] = rational_json(*b.exact);
        j["exact_method"] = b.exact_method;
    }
    if (b.witness) j["witness"] = periodic_set_json(*b.witness);
    j["kappa"] = kappa_json(b.kappa);
    return j;
}

ojson coloring_json(const ColoringNumbers& c) {
    ojson j;
    if (c.chi_f)
        j["chi_f"] = rational_json(*c.chi_f);
    else
        j["chi_f"] = nullptr;
    j["chi_c_upper"] = rational_json(c.chi_c_upper);
    return j;
}

ojson family_case_json(const FamilyCase& fc) {
    ojson j;
    j["family"] = family_name(fc.family);
    j["a"] = fc.a;
    j["n"] = fc.n;
    j["label"] = label_name(fc.label);
    if (fc.i) j["i"] = *fc.i;
    if (fc.j) j["j"] = *fc.j;
    if (fc.l) j["l"] = *fc.l;
    if (fc.q) j["q"] = *fc.q;
    if (fc.r) j["r"] = *fc.r;
    if (fc.t) j["t"] = *fc.t;
    if (fc.covered()) {
        j["bound"] = rational_json(fc.bound);
        j["exact"] = fc.exact;
    }
    return j;
}

ojson record_json(const VerificationRecord& rec) {
    ojson j;
    j["status"] = status_name(rec.status);
    j["family"] = family_name(rec.family);
    j["a"] = rec.a;
    j["n"] = rec.n;
    if (rec.status != RecordStatus::Degenerate) j["case"] = family_case_json(rec.fc);
    if (rec.status == RecordStatus::Verified) {
        j["kappa"] = rational_json(rec.kappa);
        j["kappa_c"] = rec.kappa_c;
        j["kappa_m"] = rec.kappa_m;
        j["kappa_ge_bound"] = rec.kappa_ge_bound;
        ojson rep;
        rep["c"] = rec.replay.c;
        rep["m"] = rec.replay.m;
        rep["value"] = rational_json(rec.replay.value);
        j["replay"] = rep;
        j["replay_ok"] = rec.replay_ok;
        if (rec.ceiling_ok) j["ceiling_ok"] = *rec.ceiling_ok;
        if (rec.mu_lower) j["mu_lower"] = rational_json(*rec.mu_lower);
        if (rec.mu_upper) j["mu_upper"] = rational_json(*rec.mu_upper);
        if (rec.exactness_confirmed) j["exactness_confirmed"] = *rec.exactness_confirmed;
    }
    j["ok"] = rec.ok();
    return j;
}

ojson records_json(const std::vector<VerificationRecord>& recs) {
    i64 verified = 0, uncovered = 0, degenerate = 0;
    for (const auto& r : recs) {
        switch (r.status) {
            case RecordStatus::Verified: ++verified; break;
            case RecordStatus::Uncovered: ++uncovered; break;
            case RecordStatus::Degenerate: ++degenerate; break;
        }
    }
    ojson j;
    j["total"] = static_cast<i64>(recs.size());
    j["verified"] = verified;
    j["uncovered"] = uncovered;
    j["degenerate"] = degenerate;
    j["violations"] = count_violations(recs);
    ojson arr = ojson::array();
    for (const auto& r : recs) arr.push_back(record_json(r));
    j["records"] = std::move(arr);
    return j;
}

ojson partition_report_json(const PartitionReport& rep) {
    ojson j;
    switch (rep.obs) {
        case Observation::Obs21: j["obs"] = "2.1"; break;
        case Observation::Obs31: j["obs"] = "3.1"; break;
        case Observation::Obs33: j["obs"] = "3.3"; break;
    }
    j["a"] = rep.a;
    j["start"] = rep.start;
    j["period"] = rep.period;
    j["horizon"] = rep.horizon;
    j["tiles"] = rep.tiles;
    j["covered_to"] = rep.covered_to;
    j["failure"] = rep.failure;
    j["excluded_claim"] = rep.excluded_claim;
    j["excluded_below_start"] = rep.excluded_below_start;
    return j;
}

std::string envelope_json(const Envelope& e) {
    ojson j;
    j["format_version"] = kFormatVersion;
    j["command"] = e.command;
    j["notes"] = e.notes;
    j["result"] = e.result;
    return j.dump(2) + "\n";
}

namespace {

std::string csv_opt(const std::optional<i64>& v) {
    return v ? std::to_string(*v) : std::string();
}

std::string index_summary(const FamilyCase& fc) {
    std::ostringstream os;
    bool first = true;
    auto put = [&](const char* name, const std::optional<i64>& v) {
        if (!v) return;
        if (!first) os << ' ';
        os << name << '=' << *v;
        first = false;
    };
    put("i", fc.i);
    put("j", fc.j);
    put("l", fc.l);
    put("q", fc.q);
    put("r", fc.r);
    put("t", fc.t);
    return os.str();
}

} // namespace

std::string verification_csv(const std::vector<VerificationRecord>& recs) {
    std::ostringstream os;
    os << "family,a,n,label,i,j,l,q,r,bound_num,bound_den,kappa_num,kappa_den,ok,"
          "exact_confirmed\n";
    for (const auto& r : recs) {
        os << family_name(r.family) << ',' << r.a << ',' << r.n << ',';
        if (r.status == RecordStatus::Degenerate) {
            os << "DEGENERATE,,,,,,,,,," << (r.ok() ? 1 : 0) << ",\n";
            continue;
        }
        os << label_name(r.fc.label) << ',' << csv_opt(r.fc.i) << ',' << csv_opt(r.fc.j) << ','
           << csv_opt(r.fc.l) << ',' << csv_opt(r.fc.q) << ',' << csv_opt(r.fc.r) << ',';
        if (r.fc.covered())
            os << r.fc.bound.num() << ',' << r.fc.bound.den() << ',';
        else
            os << ",,";
        if (r.status == RecordStatus::Verified)
            os << r.kappa.num() << ',' << r.kappa.den() << ',';
        else
            os << ",,";
        os << (r.ok() ? 1 : 0) << ',';
        if (r.exactness_confirmed) os << (*r.exactness_confirmed ? 1 : 0);
        os << '\n';
    }
    return os.str();
}

std::string verification_table(const std::vector<VerificationRecord>& recs) {
    std::ostringstream os;
    os << std::left << std::setw(7) << "family" << std::setw(8) << "a" << std::setw(10) << "n"
       << std::setw(14) << "label" << std::setw(18) << "indices" << std::setw(14) << "bound"
       << std::setw(14) << "kappa" << std::setw(4) << "ok" << "exact\n";
    i64 verified = 0, uncovered = 0, degenerate = 0;
    for (const auto& r : recs) {
        switch (r.status) {
            case RecordStatus::Verified: ++verified; break;
            case RecordStatus::Uncovered: ++uncovered; break;
            case RecordStatus::Degenerate: ++degenerate; break;
        }
        os << std::setw(7) << family_name(r.family) << std::setw(8) << r.a << std::setw(10)
           << r.n;
        if (r.status == RecordStatus::Degenerate) {
            os << std::setw(14) << "DEGENERATE" << std::setw(18) << "" << std::setw(14) << ""
               << std::setw(14) << "" << std::setw(4) << (r.ok() ? "1" : "0") << "\n";
            continue;
        }
        os << std::setw(14) << label_name(r.fc.label) << std::setw(18) << index_summary(r.fc)
           << std::setw(14) << (r.fc.covered() ? r.fc.bound.str() : std::string())
           << std::setw(14)
           << (r.status == RecordStatus::Verified ? r.kappa.str() : std::string())
           << std::setw(4) << (r.ok() ? "1" : "0");
        if (r.exactness_confirmed) os << (*r.exactness_confirmed ? "1" : "0");
        os << '\n';
    }
    os << "records: " << recs.size() << "  verified: " << verified
       << "  uncovered: " << uncovered << "  degenerate: " << degenerate
       << "  violations: " << count_violations(recs) << '\n';
    return os.str();
}

} // namespace motzkin
