#include "dpf/output.hpp"

#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>

namespace dpf {

namespace {

std::string join_ints(const std::vector<int>& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
    return os.str();
}

nlohmann::ordered_json rat_json(const Rat& r) {
    if (is_integer(r)) return nlohmann::ordered_json(to_ll(r));
    return nlohmann::ordered_json(to_frac_string(r));
}

}  // namespace

OutputRecord record_for_row(const CandidateRow& row, int degree) {
    OutputRecord rec;
    rec.degree = degree;
    rec.case_id = table_prefix(degree) + "." + std::to_string(row.row);
    rec.weights = row.model.display_weights();
    rec.twists = row.model.twists;
    rec.anti_k = anticanonical(row.model);
    rec.minus_k_cube = anticanonical_cube(row.model);
    if (degree != 1 && degree != 9) rec.d_class = d_class(row.model);
    rec.verdict = "candidate";
    return rec;
}

std::vector<OutputRecord> records_from_candidates(const CandidateTable& table) {
    std::vector<OutputRecord> out;
    out.reserve(table.rows.size());
    for (const CandidateRow& row : table.rows) out.push_back(record_for_row(row, table.degree));
    return out;
}

std::vector<OutputRecord> records_from_classification(
    const CandidateTable& table, const std::vector<ExclusionVerdict>& verdicts,
    const std::vector<Survivor>& survivors) {
    std::map<int, const Survivor*> by_row;
    for (const Survivor& s : survivors) by_row[s.table_row] = &s;
    std::vector<OutputRecord> out;
    for (size_t i = 0; i < table.rows.size(); ++i) {
        OutputRecord rec = record_for_row(table.rows[i], table.degree);
        if (verdicts[i].excluded) {
            rec.verdict = "excluded";
            rec.rule_id = verdicts[i].rule_id;
        } else {
            const Survivor* s = by_row.at(table.rows[i].row);
            const GoldenCase& g = golden_case(s->case_id);
            rec.verdict = "survivor";
            rec.case_id = g.id;
            rec.e = g.e;
            rec.ray_type = g.ray_type;
            rec.contraction = g.contraction;
        }
        out.push_back(std::move(rec));
    }
    return out;
}

std::string render_text(const std::vector<OutputRecord>& records) {
    std::vector<std::vector<std::string>> grid;
    grid.push_back({"case", "weights", "twists", "-K_V", "(-K_V)^3", "D", "verdict", "notes"});
    for (const OutputRecord& r : records) {
        std::string notes;
        if (r.rule_id) notes = *r.rule_id;
        if (r.e) {
            notes = "e=" + std::to_string(*r.e);
            if (r.ray_type) notes += " R'=" + *r.ray_type;
            if (r.contraction) notes += " " + *r.contraction;
        }
        grid.push_back({r.case_id, join_ints(r.weights), join_ints(r.twists), r.anti_k.str(),
                        to_frac_string(r.minus_k_cube),
                        r.d_class ? r.d_class->str() : std::string("-"), r.verdict, notes});
    }
    std::vector<size_t> width(grid[0].size(), 0);
    for (const auto& row : grid)
        for (size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    std::ostringstream os;
    for (const auto& row : grid) {
        for (size_t c = 0; c < row.size(); ++c) {
            os << std::left << std::setw(static_cast<int>(width[c]) + 2) << row[c];
        }
        os << "\n";
    }
    return os.str();
}

std::string render_csv(const std::vector<OutputRecord>& records) {
    std::ostringstream os;
    os << "degree,case_id,weights,twists,anti_k,minus_k_cube,d_class,verdict,rule_id,e,"
          "ray_type,contraction\n";
    auto quote = [](const std::string& s) {
        std::string out = "\"";
        for (char ch : s) {
            if (ch == '"') out += '"';
            out += ch;
        }
        return out + "\"";
    };
    for (const OutputRecord& r : records) {
        os << r.degree << ',' << r.case_id << ',' << quote(join_ints(r.weights)) << ','
           << quote(join_ints(r.twists)) << ',' << quote(r.anti_k.str()) << ','
           << to_frac_string(r.minus_k_cube) << ','
           << quote(r.d_class ? r.d_class->str() : std::string()) << ',' << r.verdict << ','
           << (r.rule_id ? *r.rule_id : std::string()) << ','
           << (r.e ? std::to_string(*r.e) : std::string()) << ','
           << (r.ray_type ? *r.ray_type : std::string()) << ','
           << (r.contraction ? quote(*r.contraction) : std::string("\"\"")) << "\n";
    }
    return os.str();
}

std::string render_json(const std::vector<OutputRecord>& records) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const OutputRecord& r : records) {
        nlohmann::ordered_json o;
        o["degree"] = r.degree;
        o["case_id"] = r.case_id;
        o["weights"] = r.weights;
        o["twists"] = r.twists;
        o["anti_k"] = nlohmann::ordered_json::array({rat_json(r.anti_k.alpha),
                                                     rat_json(r.anti_k.beta)});
        o["minus_k_cube"] = rat_json(r.minus_k_cube);
        if (r.d_class)
            o["d_class"] = nlohmann::ordered_json::array({rat_json(r.d_class->lambda),
                                                          rat_json(r.d_class->sigma)});
        else
            o["d_class"] = nullptr;
        o["verdict"] = r.verdict;
        if (r.rule_id) o["rule_id"] = *r.rule_id;
        if (r.e) o["e"] = *r.e;
        if (r.ray_type) o["ray_type"] = *r.ray_type;
        if (r.contraction) o["contraction"] = *r.contraction;
        arr.push_back(std::move(o));
    }
    return arr.dump(1) + "\n";
}

}  // namespace dpf
