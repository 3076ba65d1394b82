#include "finsum/json_io.hpp"

namespace finsum::io {

namespace {

BigInt big_from_json(const json& j) {
    if (j.is_number_integer()) return parse_decimal(j.dump());
    if (j.is_string()) return parse_decimal(j.get<std::string>());
    throw Error("malformed-input", "expected an integer or decimal string");
}

std::vector<BigInt> big_list_from_json(const json& j) {
    if (!j.is_array()) throw Error("malformed-input", "expected an array of integers");
    std::vector<BigInt> out;
    out.reserve(j.size());
    for (const auto& item : j) out.push_back(big_from_json(item));
    return out;
}

json big_list_to_json(const std::vector<BigInt>& xs) {
    json out = json::array();
    for (const auto& x : xs) out.push_back(to_decimal(x));
    return out;
}

}  // namespace

json spec_to_json(const FsSpec& spec) {
    return json{{"generators", big_list_to_json(spec.generators)},
                {"k", spec.k},
                {"shift", to_decimal(spec.shift)}};
}

FsSpec spec_from_json(const json& j) {
    if (!j.is_object() || !j.contains("generators") || !j.contains("k"))
        throw Error("malformed-input", "spec needs generators and k");
    FsSpec spec;
    spec.generators = big_list_from_json(j.at("generators"));
    if (!j.at("k").is_number_integer()) throw Error("malformed-input", "k must be an integer");
    spec.k = j.at("k").get<int>();
    spec.shift = j.contains("shift") ? big_from_json(j.at("shift")) : BigInt(0);
    validate_spec(spec);
    return spec;
}

json system_to_json(const LinearSystem& sys) {
    json rows = json::array();
    for (int row = 0; row < sys.rows; ++row) {
        json r = json::array();
        for (int col = 0; col < sys.cols; ++col) r.push_back(to_decimal(sys.at(row, col)));
        rows.push_back(std::move(r));
    }
    return json{{"rows", sys.rows}, {"cols", sys.cols}, {"entries", std::move(rows)}};
}

LinearSystem system_from_json(const json& j) {
    const json* rows = nullptr;
    if (j.is_array()) {
        rows = &j;
    } else if (j.is_object() && j.contains("entries")) {
        rows = &j.at("entries");
    } else {
        throw Error("malformed-input", "matrix must be an array of rows or {rows,cols,entries}");
    }
    if (!rows->is_array() || rows->empty())
        throw Error("malformed-input", "matrix needs at least one row");
    LinearSystem sys;
    sys.rows = static_cast<int>(rows->size());
    for (const auto& row : *rows) {
        auto values = big_list_from_json(row);
        if (sys.cols == 0)
            sys.cols = static_cast<int>(values.size());
        else if (sys.cols != static_cast<int>(values.size()))
            throw Error("malformed-input", "ragged matrix rows");
        for (auto& v : values) sys.entries.push_back(std::move(v));
    }
    return sys;
}

json cover_to_json(const SubsetCover& cover) {
    json out = json::array();
    for (const auto& subset : cover.subsets) out.push_back(subset);
    return out;
}

SubsetCover cover_from_json(const json& j) {
    if (!j.is_array()) throw Error("malformed-input", "cover must be an array of index arrays");
    SubsetCover cover;
    for (const auto& subset : j) {
        if (!subset.is_array()) throw Error("malformed-input", "cover subset must be an array");
        std::vector<int> ids;
        for (const auto& v : subset) {
            if (!v.is_number_integer()) throw Error("malformed-input", "indices must be integers");
            ids.push_back(v.get<int>());
        }
        std::sort(ids.begin(), ids.end());
        cover.subsets.push_back(std::move(ids));
    }
    return cover;
}

json blocks_to_json(const BlockOrdering& ordering) {
    json blocks = json::array();
    int start = 0;
    for (int size : ordering.block_sizes) {
        json block = json::array();
        for (int i = 0; i < size; ++i)
            block.push_back(ordering.column_order[static_cast<std::size_t>(start + i)]);
        blocks.push_back(std::move(block));
        start += size;
    }
    json witnesses = json::array();
    for (const auto& witness : ordering.witnesses) {
        json w = json::array();
        for (const auto& coeff : witness) w.push_back(to_fraction(coeff));
        witnesses.push_back(std::move(w));
    }
    return json{{"column_order", ordering.column_order},
                {"blocks", std::move(blocks)},
                {"witnesses", std::move(witnesses)}};
}

json solution_to_json(const SolutionVector& sol) {
    return json{{"x", big_list_to_json(sol.entries)},
                {"provenance", sol.provenance},
                {"distinct", sol.distinct},
                {"identity", sol.identity}};
}

json epsilon_matrix_to_json(const EpsilonMatrix& em) {
    json vectors = json::array();
    for (const auto& vec : em.vectors) vectors.push_back(big_list_to_json(vec));
    json audit_vectors = json::array();
    for (const auto& vec : em.audit_other) audit_vectors.push_back(big_list_to_json(vec));
    return json{{"vectors", std::move(vectors)},
                {"side", em.side == EpsilonSide::Original ? "original" : "swapped"},
                {"max_entry", to_decimal(em.max_entry)},
                {"audit",
                 json{{"side", em.side == EpsilonSide::Original ? "swapped" : "original"},
                      {"vectors", std::move(audit_vectors)},
                      {"max_entry", to_decimal(em.audit_other_max)}}}};
}

json word_to_json(const ParametricWord& word) {
    json cells = json::array();
    for (int cell : word.cells) {
        if (cell >= 0)
            cells.push_back(cell);
        else if (word.dim == 1)
            cells.push_back("*");
        else
            cells.push_back("*" + std::to_string(-cell));
    }
    return cells;
}

ParametricWord word_from_json(const json& j, int k) {
    if (!j.is_array()) throw Error("malformed-input", "word must be an array of cells");
    ParametricWord word;
    word.k = k;
    int max_var = 0;
    for (const auto& cell : j) {
        if (cell.is_number_integer()) {
            word.cells.push_back(cell.get<int>());
            continue;
        }
        if (!cell.is_string()) throw Error("malformed-input", "word cell must be int or string");
        std::string s = cell.get<std::string>();
        if (s == "*") {
            word.cells.push_back(-1);
            max_var = std::max(max_var, 1);
        } else if (!s.empty() && s[0] == '*') {
            int var = std::stoi(s.substr(1));
            if (var < 1) throw Error("malformed-input", "variable index must be >= 1");
            word.cells.push_back(-var);
            max_var = std::max(max_var, var);
        } else {
            word.cells.push_back(static_cast<int>(parse_decimal(s).get_si()));
        }
    }
    word.dim = std::max(max_var, 1);
    validate_word(word);
    return word;
}

json ground_to_json(const GroundSet& ground) {
    if (ground.kind() == GroundSet::Kind::Cube)
        return json{{"cube", json{{"t", ground.cube_t()}, {"n", ground.cube_n()}}}};
    if (ground.fs_origin()) return json{{"fs", spec_to_json(*ground.fs_origin())}};
    return json{{"values", big_list_to_json(ground.values())}};
}

GroundSet ground_from_json(const json& j) {
    if (!j.is_object()) throw Error("malformed-input", "ground set must be an object");
    if (j.contains("values")) return GroundSet::from_values(big_list_from_json(j.at("values")));
    if (j.contains("interval")) {
        const auto& iv = j.at("interval");
        if (!iv.is_array() || iv.size() != 2)
            throw Error("malformed-input", "interval must be [lo, hi]");
        return GroundSet::interval(big_from_json(iv[0]), big_from_json(iv[1]));
    }
    if (j.contains("cube")) {
        const auto& c = j.at("cube");
        return GroundSet::cube(c.at("t").get<int>(), c.at("n").get<int>());
    }
    if (j.contains("fs")) return GroundSet::from_fs(spec_from_json(j.at("fs")));
    throw Error("malformed-input", "ground set needs values, interval, cube, or fs");
}

json target_to_json(const Target& target) {
    switch (target.kind) {
        case Target::Kind::Ap:
            return json{{"kind", "ap"}, {"len", target.length}};
        case Target::Kind::Brauer:
            return json{{"kind", "brauer"}, {"len", target.length}, {"s", to_decimal(target.brauer_s)}};
        case Target::Kind::Line:
            return json{{"kind", "line"}};
        case Target::Kind::Subspace:
            return json{{"kind", "subspace"}, {"dim", target.dim}};
        case Target::Kind::Equation:
            return json{{"kind", "equation"},
                        {"system", system_to_json(*target.system)},
                        {"distinct", target.distinct}};
        case Target::Kind::ShiftedFs:
            return json{{"kind", "shifted-fs"}, {"k", target.fs_k}, {"t", target.fs_t}};
    }
    throw Error("malformed-input", "unknown target kind");
}

Target target_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw Error("malformed-input", "target needs a kind");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "ap") return Target::ap(j.at("len").get<int>());
    if (kind == "brauer")
        return Target::brauer(j.at("len").get<int>(),
                              j.contains("s") ? big_from_json(j.at("s")) : BigInt(1));
    if (kind == "line") return Target::line();
    if (kind == "subspace") return Target::subspace(j.at("dim").get<int>());
    if (kind == "equation")
        return Target::equation(system_from_json(j.at("system")),
                                j.contains("distinct") && j.at("distinct").get<bool>());
    if (kind == "shifted-fs") return Target::shifted_fs(j.at("k").get<int>(), j.at("t").get<int>());
    throw Error("malformed-input", "unknown target kind: " + kind);
}

json witness_to_json(const MonoWitness& witness) {
    json out{{"kind", witness.kind}, {"color", witness.color}};
    if (!witness.elements.empty()) out["elements"] = big_list_to_json(witness.elements);
    if (!witness.cube_words.empty()) {
        json points = json::array();
        for (const auto& point : witness.cube_words) points.push_back(point);
        out["points"] = std::move(points);
    }
    if (witness.ap)
        out["ap"] = json{{"a", to_decimal(witness.ap->a)},
                         {"d", to_decimal(witness.ap->d)},
                         {"len", witness.ap->len}};
    if (witness.brauer_sd) out["sd"] = to_decimal(*witness.brauer_sd);
    if (witness.word) out["word"] = word_to_json(*witness.word);
    if (witness.solution) out["solution"] = big_list_to_json(*witness.solution);
    if (witness.shifted) {
        out["m"] = to_decimal(witness.shifted->m);
        out["ys"] = big_list_to_json(witness.shifted->ys);
    }
    return out;
}

json verdict_to_json(const Verdict& verdict) {
    json out{{"explored", verdict.explored},
             {"budget", verdict.budget},
             {"seed", verdict.seed}};
    switch (verdict.status) {
        case Verdict::Status::Holds:
            out["holds"] = true;
            out["counterexample"] = nullptr;
            break;
        case Verdict::Status::Fails:
            out["holds"] = false;
            out["counterexample"] = json{{"colors", verdict.counterexample->colors},
                                         {"r", verdict.counterexample->r}};
            break;
        case Verdict::Status::Inconclusive:
            out["holds"] = nullptr;
            out["inconclusive"] = "budget";
            out["counterexample"] = nullptr;
            break;
    }
    return out;
}

json number_result_to_json(const NumberResult& result, int cap) {
    json out{{"cap", cap}, {"explored", result.explored}};
    out["value"] = result.value ? json(*result.value) : json(nullptr);
    out["counterexample_at"] =
        result.counterexample_n ? json(*result.counterexample_n) : json(nullptr);
    if (result.counterexample)
        out["counterexample"] = json{{"colors", result.counterexample->colors},
                                     {"r", result.counterexample->r}};
    else
        out["counterexample"] = nullptr;
    if (result.budget_hit) out["inconclusive"] = "budget";
    if (!result.value && !result.budget_hit) out["unknown_beyond_cap"] = true;
    return out;
}

}  // namespace finsum::io
