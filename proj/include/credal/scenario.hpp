#pragma once

// Scenario documents: states, partition, credal set(s), acts and options,
// stored as YAML with rationals written as "a/b" strings.
//
//   states: [R, B, G]
//   partition: [[G], [R, B]]
//   credal_set:
//     - ["1/3", "0", "2/3"]
//     - ["1/3", "2/3", "0"]
//   acts:
//     f: [10, 0, 10]
//   options: {mode: lenient, seed: 7}
//
// Optional keys: `consequence_table` (label -> utility; acts may then use
// labels), `credal_set_hat` (second set for axiom checks).

#include <yaml-cpp/yaml.h>

#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "credal/audit.hpp"
#include "credal/credal_set.hpp"
#include "credal/errors.hpp"
#include "credal/model.hpp"
#include "credal/sampling.hpp"

namespace credal {

/// Error with the offending field and 1-based line (0 when unknown).
class ScenarioError : public Error {
public:
    ScenarioError(const std::string& kind, std::string field, int line, const std::string& message)
        : Error(kind + (line > 0 ? " at line " + std::to_string(line) : std::string()) +
                (field.empty() ? std::string() : " in '" + field + "'") + ": " + message),
          field_(std::move(field)),
          line_(line) {}

    const std::string& field() const noexcept { return field_; }
    int line() const noexcept { return line_; }

private:
    std::string field_;
    int line_;
};

class ParseError : public ScenarioError {
public:
    ParseError(std::string field, int line, const std::string& message)
        : ScenarioError("parse error", std::move(field), line, message) {}
};

class ValidationError : public ScenarioError {
public:
    ValidationError(std::string field, int line, const std::string& message)
        : ScenarioError("validation error", std::move(field), line, message) {}
};

struct ScenarioDocument {
    StateSpace states;
    std::vector<std::vector<std::string>> partition_labels;
    Partition partition;
    std::vector<Prior> credal_set;
    std::optional<std::vector<Prior>> credal_set_hat;
    std::vector<NamedAct> acts;
    std::optional<ConsequenceTable> consequence_table;
    UpdateMode mode = UpdateMode::Strict;
    std::uint64_t seed = default_seed;

    CredalSet credal() const { return CredalSet(states, credal_set); }

    std::optional<CredalSet> credal_hat() const {
        if (!credal_set_hat) return std::nullopt;
        return CredalSet(states, *credal_set_hat);
    }

    const NamedAct* find_act(const std::string& name) const {
        for (const auto& a : acts)
            if (a.name == name) return &a;
        return nullptr;
    }

    friend bool operator==(const ScenarioDocument&, const ScenarioDocument&) = default;
};

namespace detail {

inline int line_of(const YAML::Node& n) {
    const auto m = n.Mark();
    return m.line >= 0 ? m.line + 1 : 0;
}

inline std::string scalar(const YAML::Node& n, const std::string& field) {
    if (!n.IsScalar()) throw ValidationError(field, line_of(n), "expected a scalar");
    return n.Scalar();
}

inline YAML::Node require_sequence(const YAML::Node& n, const std::string& field) {
    if (!n.IsSequence()) throw ValidationError(field, line_of(n), "expected a list");
    return n;
}

inline Rational rational_at(const YAML::Node& n, const std::string& field) {
    try {
        return parse_rational(scalar(n, field));
    } catch (const InvalidArgument& e) {
        throw ValidationError(field, line_of(n), e.what());
    }
}

inline Prior prior_at(const YAML::Node& row, const std::string& field, std::size_t n_states) {
    require_sequence(row, field);
    if (row.size() != n_states)
        throw ValidationError(field, line_of(row),
                              "has " + std::to_string(row.size()) + " entries, expected " + std::to_string(n_states));
    RationalVector v;
    for (std::size_t s = 0; s < row.size(); ++s) v.push_back(rational_at(row[s], field + "[" + std::to_string(s) + "]"));
    try {
        return Prior(std::move(v));
    } catch (const InvalidArgument& e) {
        throw ValidationError(field, line_of(row), std::string(e.what()) + " (not a normalized prior)");
    }
}

inline std::vector<Prior> priors_at(const YAML::Node& n, const std::string& field, std::size_t n_states) {
    require_sequence(n, field);
    if (n.size() == 0) throw ValidationError(field, line_of(n), "credal set needs at least one prior");
    std::vector<Prior> out;
    for (std::size_t k = 0; k < n.size(); ++k)
        out.push_back(prior_at(n[k], field + "[" + std::to_string(k) + "]", n_states));
    return out;
}

}  // namespace detail

inline ScenarioDocument parse_scenario(const std::string& text) {
    using detail::line_of;
    YAML::Node root;
    try {
        root = YAML::Load(text);
    } catch (const YAML::ParserException& e) {
        throw ParseError("", e.mark.line >= 0 ? e.mark.line + 1 : 0, e.msg);
    }
    if (!root.IsMap()) throw ParseError("", 0, "a scenario must be a mapping of keys");

    static const std::vector<std::string> known = {"states", "partition", "credal_set", "credal_set_hat",
                                                   "acts", "consequence_table", "options"};
    for (const auto& kv : root) {
        const auto key = kv.first.Scalar();
        if (std::find(known.begin(), known.end(), key) == known.end())
            throw ValidationError(key, line_of(kv.first), "unknown key");
    }
    for (const char* key : {"states", "partition", "credal_set", "acts"})
        if (!root[key]) throw ValidationError(key, 0, "missing required key");

    ScenarioDocument doc;

    // states
    {
        const auto n = detail::require_sequence(root["states"], "states");
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < n.size(); ++i) labels.push_back(detail::scalar(n[i], "states"));
        if (labels.size() < 2) throw ValidationError("states", line_of(n), "need at least two states");
        try {
            doc.states = StateSpace(std::move(labels));
        } catch (const InvalidArgument& e) {
            throw ValidationError("states", line_of(n), e.what());
        }
    }
    const std::size_t n_states = doc.states.size();

    // partition
    {
        const auto n = detail::require_sequence(root["partition"], "partition");
        for (std::size_t i = 0; i < n.size(); ++i) {
            const auto field = "partition[" + std::to_string(i) + "]";
            detail::require_sequence(n[i], field);
            std::vector<std::string> cell;
            for (std::size_t j = 0; j < n[i].size(); ++j) {
                auto label = detail::scalar(n[i][j], field);
                if (!doc.states.find(label))
                    throw ValidationError(field, line_of(n[i][j]), "unknown state label '" + label + "'");
                cell.push_back(std::move(label));
            }
            doc.partition_labels.push_back(std::move(cell));
        }
        try {
            doc.partition = Partition::from_labels(doc.states, doc.partition_labels);
        } catch (const InvalidArgument& e) {
            throw ValidationError("partition", line_of(n), e.what());
        }
    }

    doc.credal_set = detail::priors_at(root["credal_set"], "credal_set", n_states);
    if (root["credal_set_hat"]) doc.credal_set_hat = detail::priors_at(root["credal_set_hat"], "credal_set_hat", n_states);

    if (const auto table = root["consequence_table"]) {
        if (!table.IsMap()) throw ValidationError("consequence_table", line_of(table), "expected a mapping");
        ConsequenceTable t;
        for (const auto& kv : table) {
            const auto label = kv.first.Scalar();
            try {
                t.add(label, detail::rational_at(kv.second, "consequence_table." + label));
            } catch (const InvalidArgument& e) {
                throw ValidationError("consequence_table", line_of(kv.first), e.what());
            }
        }
        doc.consequence_table = std::move(t);
    }

    // acts: entries are rationals, or consequence labels when a table exists
    {
        const auto acts = root["acts"];
        if (!acts.IsMap() || acts.size() == 0) throw ValidationError("acts", line_of(acts), "expected a non-empty mapping");
        for (const auto& kv : acts) {
            const auto name = kv.first.Scalar();
            const auto field = "acts." + name;
            if (name.empty()) throw ValidationError("acts", line_of(kv.first), "empty act name");
            if (doc.find_act(name)) throw ValidationError(field, line_of(kv.first), "duplicate act name");
            const auto row = detail::require_sequence(kv.second, field);
            if (row.size() != n_states)
                throw ValidationError(field, line_of(row),
                                      "has " + std::to_string(row.size()) + " entries, expected " + std::to_string(n_states));
            RationalVector u;
            for (std::size_t s = 0; s < row.size(); ++s) {
                const auto text = detail::scalar(row[s], field);
                if (doc.consequence_table) {
                    if (auto v = doc.consequence_table->utility(text)) {
                        u.push_back(*v);
                        continue;
                    }
                }
                u.push_back(detail::rational_at(row[s], field + "[" + std::to_string(s) + "]"));
            }
            doc.acts.push_back({name, UtilityProfile(std::move(u))});
        }
    }

    if (const auto opts = root["options"]) {
        if (!opts.IsMap()) throw ValidationError("options", line_of(opts), "expected a mapping");
        for (const auto& kv : opts) {
            const auto key = kv.first.Scalar();
            const auto value = detail::scalar(kv.second, "options." + key);
            if (key == "mode") {
                if (value == "strict")
                    doc.mode = UpdateMode::Strict;
                else if (value == "lenient")
                    doc.mode = UpdateMode::Lenient;
                else
                    throw ValidationError("options.mode", line_of(kv.second), "expected strict or lenient, got '" + value + "'");
            } else if (key == "seed") {
                try {
                    std::size_t used = 0;
                    doc.seed = std::stoull(value, &used);
                    if (used != value.size() || value.front() == '-') throw std::invalid_argument(value);
                } catch (const std::exception&) {
                    throw ValidationError("options.seed", line_of(kv.second), "expected a non-negative integer");
                }
            } else {
                throw ValidationError("options." + key, line_of(kv.first), "unknown option");
            }
        }
    }
    return doc;
}

inline ScenarioDocument load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("", 0, "cannot open scenario file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

/// Writes the document back as YAML. Acts are written in utility units.
inline std::string render_scenario(const ScenarioDocument& doc) {
    YAML::Emitter out;
    auto prior_list = [&](const std::vector<Prior>& priors) {
        out << YAML::BeginSeq;
        for (const auto& p : priors) {
            out << YAML::Flow << YAML::BeginSeq;
            for (const auto& x : p.mass()) out << YAML::DoubleQuoted << to_string(x);
            out << YAML::EndSeq;
        }
        out << YAML::EndSeq;
    };

    out << YAML::BeginMap;
    out << YAML::Key << "states" << YAML::Value << YAML::Flow << doc.states.labels();
    out << YAML::Key << "partition" << YAML::Value << YAML::Flow << YAML::BeginSeq;
    for (const auto& cell : doc.partition_labels) out << YAML::Flow << cell;
    out << YAML::EndSeq;
    out << YAML::Key << "credal_set" << YAML::Value;
    prior_list(doc.credal_set);
    if (doc.credal_set_hat) {
        out << YAML::Key << "credal_set_hat" << YAML::Value;
        prior_list(*doc.credal_set_hat);
    }
    if (doc.consequence_table) {
        out << YAML::Key << "consequence_table" << YAML::Value << YAML::BeginMap;
        for (const auto& [label, u] : doc.consequence_table->entries())
            out << YAML::Key << YAML::DoubleQuoted << label << YAML::Value << YAML::DoubleQuoted << to_string(u);
        out << YAML::EndMap;
    }
    out << YAML::Key << "acts" << YAML::Value << YAML::BeginMap;
    for (const auto& a : doc.acts) {
        out << YAML::Key << YAML::DoubleQuoted << a.name << YAML::Value << YAML::Flow << YAML::BeginSeq;
        for (const auto& x : a.utils.utils()) out << YAML::DoubleQuoted << to_string(x);
        out << YAML::EndSeq;
    }
    out << YAML::EndMap;
    out << YAML::Key << "options" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "mode" << YAML::Value << to_string(doc.mode);
    out << YAML::Key << "seed" << YAML::Value << doc.seed;
    out << YAML::EndMap;
    out << YAML::EndMap;
    return std::string(out.c_str()) + "\n";
}

}  // namespace credal
