#include "intsep/io.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace intsep {

namespace {

std::vector<std::string> tokenize(const std::string& raw) {
    std::string line = raw;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::vector<std::string> tokens;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) tokens.push_back(tok);
    return tokens;
}

// id -> sorted index
std::vector<int> id_index(const Instance& inst) {
    std::vector<int> map(static_cast<size_t>(inst.n()) + 1, 0);
    for (int idx = 1; idx <= inst.n(); ++idx) map[static_cast<size_t>(inst.at(idx).id)] = idx;
    return map;
}

} // namespace

Instance parse_instance(std::istream& in) {
    std::vector<std::pair<Scalar, Scalar>> raw;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        if (tokens.size() != 2) throw ParseError(lineno, "expected \"left right\"");
        auto l = Scalar::parse(tokens[0]);
        auto r = Scalar::parse(tokens[1]);
        if (!l) throw ParseError(lineno, "bad number \"" + tokens[0] + "\"");
        if (!r) throw ParseError(lineno, "bad number \"" + tokens[1] + "\"");
        if (!(*l < *r)) throw ParseError(lineno, "degenerate interval (left >= right)");
        raw.emplace_back(std::move(*l), std::move(*r));
    }
    return normalize_instance(raw);
}

std::string render_instance(const Instance& inst) {
    std::vector<const Interval*> by_id(static_cast<size_t>(inst.n()) + 1, nullptr);
    for (const Interval& iv : inst.intervals()) by_id[static_cast<size_t>(iv.id)] = &iv;
    std::string out;
    for (int id = 1; id <= inst.n(); ++id) {
        out += by_id[static_cast<size_t>(id)]->left.str();
        out += ' ';
        out += by_id[static_cast<size_t>(id)]->right.str();
        out += '\n';
    }
    return out;
}

SolutionFile parse_solution(std::istream& in) {
    SolutionFile sol;
    std::string line;
    int lineno = 0;
    bool have_delta = false;
    while (std::getline(in, line)) {
        ++lineno;
        auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        if (!have_delta) {
            if (tokens.size() != 2 || tokens[0] != "delta") throw ParseError(lineno, "expected \"delta <value>\"");
            auto d = Scalar::parse(tokens[1]);
            if (!d) throw ParseError(lineno, "bad number \"" + tokens[1] + "\"");
            sol.delta = std::move(*d);
            have_delta = true;
            continue;
        }
        if (tokens.size() != 3) throw ParseError(lineno, "expected \"id new_left displacement\"");
        SolutionRow row;
        try {
            size_t used = 0;
            row.id = std::stoi(tokens[0], &used);
            if (used != tokens[0].size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw ParseError(lineno, "bad id \"" + tokens[0] + "\"");
        }
        auto nl = Scalar::parse(tokens[1]);
        auto disp = Scalar::parse(tokens[2]);
        if (!nl) throw ParseError(lineno, "bad number \"" + tokens[1] + "\"");
        if (!disp) throw ParseError(lineno, "bad number \"" + tokens[2] + "\"");
        row.new_left = std::move(*nl);
        row.displacement = std::move(*disp);
        sol.rows.push_back(std::move(row));
    }
    if (!have_delta) throw ParseError(lineno, "missing delta line");
    return sol;
}

std::string render_solution(const Instance& inst, const Solution& sol) {
    std::string out = "delta " + sol.delta.str() + "\n";
    std::vector<int> idx = id_index(inst);
    for (int id = 1; id <= inst.n(); ++id) {
        int sorted = idx[static_cast<size_t>(id)];
        const Scalar& pos = sol.config.at(sorted);
        out += std::to_string(id);
        out += ' ';
        out += pos.str();
        out += ' ';
        out += (pos - inst.left(sorted)).str();
        out += '\n';
    }
    return out;
}

VerifyResult verify_solution(const Instance& inst, const SolutionFile& sol, Direction dir) {
    auto fail = [](std::string msg) { return VerifyResult{false, std::move(msg)}; };
    if (static_cast<int>(sol.rows.size()) != inst.n()) {
        return fail("solution covers " + std::to_string(sol.rows.size()) + " intervals, instance has " +
                    std::to_string(inst.n()));
    }
    std::vector<int> idx = id_index(inst);
    std::vector<char> seen(static_cast<size_t>(inst.n()) + 1, 0);
    Configuration cfg(inst.n());
    for (const SolutionRow& row : sol.rows) {
        if (row.id < 1 || row.id > inst.n()) return fail("unknown interval id " + std::to_string(row.id));
        if (seen[static_cast<size_t>(row.id)]) return fail("interval id " + std::to_string(row.id) + " repeated");
        seen[static_cast<size_t>(row.id)] = 1;
        int sorted = idx[static_cast<size_t>(row.id)];
        if (row.new_left - inst.left(sorted) != row.displacement) {
            return fail("interval " + std::to_string(row.id) + ": displacement does not match new position");
        }
        if (dir == Direction::OneDirection && row.displacement.sign() < 0) {
            return fail("interval " + std::to_string(row.id) + ": negative displacement in one-direction mode");
        }
        cfg.set(sorted, row.new_left);
    }
    // overlap check that names the offending pair
    std::vector<int> order = cfg.covered();
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int c = cfg.at(a).cmp(cfg.at(b));
        if (c != 0) return c < 0;
        return a < b;
    });
    for (size_t k = 0; k + 1 < order.size(); ++k) {
        Scalar right_end = cfg.at(order[k]) + inst.length(order[k]);
        if (cfg.at(order[k + 1]) < right_end) {
            return fail("intervals " + std::to_string(inst.at(order[k]).id) + " and " +
                        std::to_string(inst.at(order[k + 1]).id) + " overlap");
        }
    }
    Scalar recomputed = max_displacement(cfg, inst, dir);
    if (recomputed != sol.delta) {
        return fail("stated delta " + sol.delta.str() + " differs from recomputed " + recomputed.str());
    }
    return {};
}

} // namespace intsep
