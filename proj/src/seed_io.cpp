#include "cluster/seed_io.hpp"

#include <fstream>
#include <sstream>

namespace cluster {

Rat parse_rat(const std::string& tok) {
    auto slash = tok.find('/');
    try {
        if (slash == std::string::npos) return Rat(std::stoll(tok));
        return Rat(std::stoll(tok.substr(0, slash)), std::stoll(tok.substr(slash + 1)));
    } catch (const std::exception&) {
        throw ParseError("bad numeric token '" + tok + "'");
    }
}

IntVec parse_ivec(const std::string& tok) {
    IntVec out;
    std::string cur;
    std::istringstream in(tok);
    while (std::getline(in, cur, ',')) {
        try {
            out.push_back(std::stoll(cur));
        } catch (const std::exception&) {
            throw ParseError("bad integer '" + cur + "' in vector '" + tok + "'");
        }
    }
    if (out.empty()) throw ParseError("empty vector argument");
    return out;
}

std::vector<int> parse_path_arg(const std::string& tok, const Seed& s) {
    std::vector<int> out;
    for (i64 v : parse_ivec(tok)) {
        if (v < 1 || v > s.n())
            throw ParseError("path vertex " + std::to_string(v) + " out of range 1.." +
                             std::to_string(s.n()));
        if (!s.is_unfrozen(int(v - 1)))
            throw ParseError("path vertex " + std::to_string(v) + " is frozen");
        out.push_back(int(v - 1));
    }
    return out;
}

Seed parse_seed(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool header = false;
    int n = -1;
    std::vector<int> unfrozen;
    std::vector<i64> weights;
    std::vector<std::vector<Rat>> rows;
    std::vector<std::string> labels;

    auto fail = [&](const std::string& msg) {
        throw ParseError("seed file line " + std::to_string(lineno) + ": " + msg);
    };

    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) continue;
        if (!header) {
            std::string ver;
            if (key != "seed" || !(ls >> ver) || ver != "v1")
                fail("expected header 'seed v1'");
            header = true;
            continue;
        }
        if (key == "n") {
            if (!(ls >> n) || n <= 0) fail("bad vertex count");
            labels.assign(n, "");
        } else if (key == "unfrozen") {
            int v;
            while (ls >> v) {
                if (n < 0) fail("'n' must precede 'unfrozen'");
                if (v < 1 || v > n) fail("unfrozen index out of range");
                unfrozen.push_back(v - 1);
            }
        } else if (key == "d") {
            i64 w;
            while (ls >> w) weights.push_back(w);
        } else if (key == "row") {
            std::vector<Rat> row;
            std::string tok;
            while (ls >> tok) row.push_back(parse_rat(tok));
            rows.push_back(std::move(row));
        } else if (key == "label") {
            int idx;
            std::string name;
            if (!(ls >> idx >> name) || n < 0 || idx < 1 || idx > n) fail("bad label line");
            labels[idx - 1] = name;
        } else {
            fail("unknown key '" + key + "'");
        }
    }
    if (!header) throw ParseError("seed file: missing 'seed v1' header");
    if (n < 0) throw ParseError("seed file: missing 'n'");
    if (int(rows.size()) != n) throw ParseError("seed file: expected " + std::to_string(n) + " rows");
    Mat b(n, n);
    for (int i = 0; i < n; ++i) {
        if (int(rows[i].size()) != n)
            throw ParseError("seed file: row " + std::to_string(i + 1) + " has wrong length");
        for (int j = 0; j < n; ++j) b.at(i, j) = rows[i][j];
    }
    try {
        return Seed(n, unfrozen, weights, std::move(b), labels);
    } catch (const ConfigError& e) {
        throw ParseError(std::string("seed file: ") + e.what());
    }
}

Seed load_seed(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open seed file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_seed(buf.str());
}

std::string serialize_seed(const Seed& s) {
    std::ostringstream os;
    os << "seed v1\n";
    os << "n " << s.n() << "\n";
    os << "unfrozen";
    for (int k : s.unfrozen()) os << " " << (k + 1);
    os << "\n";
    os << "d";
    for (i64 w : s.weights()) os << " " << w;
    os << "\n";
    for (int i = 0; i < s.n(); ++i) {
        os << "row";
        for (int j = 0; j < s.n(); ++j) os << " " << s.b().at(i, j).str();
        os << "\n";
    }
    if (!s.labels().empty())
        for (int i = 0; i < s.n(); ++i)
            if (!s.labels()[i].empty()) os << "label " << (i + 1) << " " << s.labels()[i] << "\n";
    return os.str();
}

} // namespace cluster
