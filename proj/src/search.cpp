#include "scullen/search.hpp"

#include <json.hpp>
#include <omp.h>

#include <chrono>
#include <filesystem>
#include <fstream>

namespace scullen {

namespace {

using json = nlohmann::ordered_json;

constexpr unsigned long kBlockColumns = 64;  // checkpoint cadence

void validate(const SearchConfig& cfg)
{
    if (cfg.s_min < 2 || cfg.s_min > cfg.s_max)
        throw std::invalid_argument("search: need 2 <= s_min <= s_max");
    if (cfg.n_min < 1 || cfg.n_min > cfg.n_max)
        throw std::invalid_argument("search: need 1 <= n_min <= n_max");
    if (cfg.workers < 1)
        throw std::invalid_argument("search: need workers >= 1");
}

json natural_json(const Natural& v)
{
    if (v.fits_ulong_p())
        return v.get_ui();
    return v.get_str();
}

json hit_json(const HitRecord& hit)
{
    json forms = json::array();
    for (const auto& f : hit.forms)
        forms.push_back({{"b", natural_json(f.base)}, {"q", f.length}});
    json j{{"s", hit.index.s},
           {"n", hit.index.n},
           {"value", hit.value.get_str()},
           {"forms", std::move(forms)}};
    switch (hit.family) {
    case FamilyTag::A: j["family"] = "A"; break;
    case FamilyTag::B: j["family"] = "B"; break;
    case FamilyTag::None: j["family"] = nullptr; break;
    }
    return j;
}

HitRecord hit_from_json(const json& j)
{
    HitRecord hit;
    hit.index = {j.at("s").get<unsigned long>(), j.at("n").get<unsigned long>()};
    hit.value = Natural(j.at("value").get<std::string>());
    for (const auto& f : j.at("forms")) {
        const auto& b = f.at("b");
        Natural base = b.is_string() ? Natural(b.get<std::string>())
                                     : Natural(b.get<unsigned long>());
        hit.forms.push_back({std::move(base), f.at("q").get<unsigned long>()});
    }
    const auto& fam = j.at("family");
    hit.family = fam.is_null() ? FamilyTag::None
                 : fam.get<std::string>() == "A" ? FamilyTag::A
                                                 : FamilyTag::B;
    return hit;
}

struct Checkpoint {
    std::string fingerprint;
    unsigned long completed_s = 0;
    std::vector<HitRecord> hits;
    SearchStats stats;
};

void save_checkpoint(const std::string& path, const Checkpoint& cp)
{
    json hits = json::array();
    for (const auto& h : cp.hits)
        hits.push_back(hit_json(h));
    json j{{"fingerprint", cp.fingerprint},
           {"completed_s", cp.completed_s},
           {"hits", std::move(hits)},
           {"stats",
            {{"cells", cp.stats.cells},
             {"hits_family_a", cp.stats.hits_family_a},
             {"hits_family_b", cp.stats.hits_family_b},
             {"hits_none", cp.stats.hits_none}}}};

    const std::string tmp = path + ".tmp";
    {
        std::ofstream os(tmp, std::ios::trunc);
        if (!os)
            throw IoError("cannot write checkpoint: " + tmp);
        os << j.dump() << '\n';
        if (!os.flush())
            throw IoError("cannot write checkpoint: " + tmp);
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec)
        throw IoError("cannot replace checkpoint " + path + ": " + ec.message());
}

Checkpoint load_checkpoint(const std::string& path)
{
    std::ifstream is(path);
    if (!is)
        throw IoError("checkpoint not found: " + path);
    json j;
    try {
        is >> j;
        Checkpoint cp;
        cp.fingerprint = j.at("fingerprint").get<std::string>();
        cp.completed_s = j.at("completed_s").get<unsigned long>();
        for (const auto& h : j.at("hits"))
            cp.hits.push_back(hit_from_json(h));
        const auto& st = j.at("stats");
        cp.stats.cells = st.at("cells").get<unsigned long long>();
        cp.stats.hits_family_a = st.at("hits_family_a").get<unsigned long long>();
        cp.stats.hits_family_b = st.at("hits_family_b").get<unsigned long long>();
        cp.stats.hits_none = st.at("hits_none").get<unsigned long long>();
        return cp;
    } catch (const json::exception& e) {
        throw CheckpointError("corrupt checkpoint " + path + ": " + e.what());
    }
}

// Scan one s column; hits come out in ascending n.
std::vector<HitRecord> scan_column(unsigned long s, unsigned long n_min,
                                   unsigned long n_max)
{
    std::vector<HitRecord> hits;
    cullen_range(s, s, n_min, n_max, [&](const CullenIndex& idx, Natural value) {
        auto forms = detect_repunits(value);
        if (!forms.empty())
            hits.push_back({idx, std::move(value), std::move(forms), classify(idx)});
    });
    return hits;
}

void count_hit(SearchStats& stats, const HitRecord& hit)
{
    switch (hit.family) {
    case FamilyTag::A: ++stats.hits_family_a; break;
    case FamilyTag::B: ++stats.hits_family_b; break;
    case FamilyTag::None: ++stats.hits_none; break;
    }
}

}  // namespace

std::string config_fingerprint(const SearchConfig& cfg)
{
    return std::to_string(cfg.s_min) + ":" + std::to_string(cfg.s_max) + ":" +
           std::to_string(cfg.n_min) + ":" + std::to_string(cfg.n_max) +
           ":order-v1";
}

SearchReport run_search(const SearchConfig& cfg)
{
    validate(cfg);
    const auto t0 = std::chrono::steady_clock::now();

    Checkpoint cp;
    cp.fingerprint = config_fingerprint(cfg);
    cp.completed_s = cfg.s_min - 1;

    const bool use_checkpoint = !cfg.checkpoint_path.empty();
    if (use_checkpoint && cfg.require_checkpoint &&
        !std::filesystem::exists(cfg.checkpoint_path))
        throw IoError("checkpoint not found: " + cfg.checkpoint_path);
    if (use_checkpoint && std::filesystem::exists(cfg.checkpoint_path)) {
        Checkpoint loaded = load_checkpoint(cfg.checkpoint_path);
        if (loaded.fingerprint != cp.fingerprint)
            throw CheckpointError("checkpoint fingerprint mismatch: file has '" +
                                  loaded.fingerprint + "', config is '" +
                                  cp.fingerprint + "'");
        cp = std::move(loaded);
    }

    const unsigned long stop_s = cfg.stop_after_s == 0
                                     ? cfg.s_max
                                     : std::min(cfg.stop_after_s, cfg.s_max);
    const unsigned long n_count = cfg.n_max - cfg.n_min + 1;

    for (unsigned long block = cp.completed_s + 1; block <= stop_s;) {
        const unsigned long block_end =
            std::min({block + kBlockColumns - 1, stop_s});
        const long width = static_cast<long>(block_end - block + 1);
        std::vector<std::vector<HitRecord>> column_hits(width);

#pragma omp parallel for num_threads(cfg.workers) schedule(dynamic)
        for (long i = 0; i < width; ++i)
            column_hits[i] = scan_column(block + i, cfg.n_min, cfg.n_max);

        for (auto& col : column_hits) {
            for (auto& hit : col) {
                count_hit(cp.stats, hit);
                cp.hits.push_back(std::move(hit));
            }
        }
        cp.stats.cells += static_cast<unsigned long long>(width) * n_count;
        cp.completed_s = block_end;
        if (use_checkpoint)
            save_checkpoint(cfg.checkpoint_path, cp);
        block = block_end + 1;
    }

    SearchReport report;
    report.complete = cp.completed_s >= cfg.s_max;
    report.stats = cp.stats;
    for (auto& hit : cp.hits)
        if (!cfg.exclude_families || hit.family == FamilyTag::None)
            report.hits.push_back(std::move(hit));
    report.stats.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

SearchReport run_search_serial(const SearchConfig& cfg)
{
    validate(cfg);
    const auto t0 = std::chrono::steady_clock::now();

    SearchReport report;
    for (unsigned long s = cfg.s_min; s <= cfg.s_max; ++s) {
        for (unsigned long n = cfg.n_min; n <= cfg.n_max; ++n) {
            const CullenIndex idx{s, n};
            Natural value = cullen_value(idx);
            auto forms = detect_repunits(value);
            ++report.stats.cells;
            if (forms.empty())
                continue;
            HitRecord hit{idx, std::move(value), std::move(forms), classify(idx)};
            count_hit(report.stats, hit);
            if (!cfg.exclude_families || hit.family == FamilyTag::None)
                report.hits.push_back(std::move(hit));
        }
    }
    report.stats.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

ConditionalSummary conditional_exclusion_report(const SearchConfig& cfg)
{
    validate(cfg);
    const auto eq1 = enumerate_eq1_exceptions();
    const auto eq3 = enumerate_eq3_exceptions();

    const auto in_range_s = [&](unsigned long s) {
        return s >= cfg.s_min && s <= cfg.s_max;
    };

    ConditionalSummary sum;
    const unsigned long long row = cfg.s_max - cfg.s_min + 1;
    for (unsigned long n = cfg.n_min; n <= cfg.n_max; ++n) {
        sum.cells += row;
        const bool len3_applies = n >= 3;    // Eq. (1) context
        const bool longer_applies = n >= 2;  // Eq. (3) context

        if (!longer_applies) {  // n = 1: neither inequality says anything
            sum.unexcluded += row;
            continue;
        }

        unsigned long long in1 = 0, in2 = 0, in_both = 0;
        for (unsigned long s = cfg.s_min; s <= cfg.s_max; ++s) {
            const bool m1 = len3_applies && eq1.count({s, n});
            const bool m2 = longer_applies && eq3.count({s, n});
            in1 += m1;
            in2 += m2;
            in_both += m1 && m2;
        }

        if (!len3_applies) {  // n = 2: only the length > 3 exclusion applies
            sum.excluded_longer_only += row - in2;
            sum.unexcluded += in2;
            continue;
        }
        sum.excluded_both += row - (in1 + in2 - in_both);
        sum.excluded_len3_only += in2 - in_both;
        sum.excluded_longer_only += in1 - in_both;
        sum.unexcluded += in_both;
    }

    for (const auto& cell : eq1)
        if (in_range_s(cell.first) && cell.second >= cfg.n_min && cell.second <= cfg.n_max)
            sum.eq1_members_in_range.push_back(cell);
    for (const auto& cell : eq3)
        if (in_range_s(cell.first) && cell.second >= cfg.n_min && cell.second <= cfg.n_max)
            sum.eq3_members_in_range.push_back(cell);
    return sum;
}

void write_report_jsonl(std::ostream& os, const SearchConfig& cfg,
                        const SearchReport& report)
{
    for (const auto& hit : report.hits)
        os << hit_json(hit).dump() << '\n';

    if (cfg.report_conditional_exclusions) {
        const ConditionalSummary sum = conditional_exclusion_report(cfg);
        json members1 = json::array(), members3 = json::array();
        for (const auto& [s, n] : sum.eq1_members_in_range)
            members1.push_back({s, n});
        for (const auto& [s, n] : sum.eq3_members_in_range)
            members3.push_back({s, n});
        json j{{"type", "conditional"},
               {"cells", sum.cells},
               {"excluded_both", sum.excluded_both},
               {"excluded_len3_only", sum.excluded_len3_only},
               {"excluded_longer_only", sum.excluded_longer_only},
               {"unexcluded", sum.unexcluded},
               {"eq1_members", std::move(members1)},
               {"eq3_members", std::move(members3)}};
        os << j.dump() << '\n';
    }

    json j{{"type", "summary"},
           {"fingerprint", config_fingerprint(cfg)},
           {"cells", report.stats.cells},
           {"hits_family_a", report.stats.hits_family_a},
           {"hits_family_b", report.stats.hits_family_b},
           {"hits_none", report.stats.hits_none},
           {"exclude_families", cfg.exclude_families},
           {"complete", report.complete}};
    os << j.dump() << '\n';
}

}  // namespace scullen
