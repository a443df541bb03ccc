#include <lie/json_io.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace lie {

using ordered_json = nlohmann::ordered_json;

std::string algebra_to_json(const AlgebraDoc& doc, bool pretty) {
    const LieAlgebra& q = doc.algebra;
    ordered_json j;
    j["dim"] = q.dim();
    j["basis"] = q.labels();
    ordered_json brackets = ordered_json::array();
    for (int i = 0; i < q.dim(); ++i) {
        for (int k = i + 1; k < q.dim(); ++k) {
            const TermList terms = q.bracket_basis(i, k);
            if (terms.empty()) continue;
            ordered_json entry;
            entry["i"] = i;
            entry["j"] = k;
            ordered_json c;
            for (const Term& t : terms) c[std::to_string(t.k)] = rat_str(t.c);
            entry["c"] = c;
            brackets.push_back(entry);
        }
    }
    j["brackets"] = brackets;
    if (doc.splitting) {
        j["splitting"] = {{"levi", doc.splitting->levi}, {"ideal", doc.splitting->ideal}};
    }
    return pretty ? j.dump(2) : j.dump();
}

AlgebraDoc algebra_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("dim") || !j.contains("basis") || !j.contains("brackets"))
        throw std::runtime_error("algebra document needs dim, basis and brackets");

    const int n = j["dim"].get<int>();
    auto labels = j["basis"].get<std::vector<std::string>>();
    if (static_cast<int>(labels.size()) != n)
        throw std::runtime_error("basis size does not match dim");

    std::vector<BracketEntry> entries;
    for (const auto& e : j["brackets"]) {
        BracketEntry be;
        be.i = e.at("i").get<int>();
        be.j = e.at("j").get<int>();
        for (const auto& [key, val] : e.at("c").items()) {
            Term t;
            try {
                t.k = std::stoi(key);
            } catch (const std::exception&) {
                throw std::runtime_error("bracket target is not an index: " + key);
            }
            t.c = rat_parse(val.get<std::string>());
            if (t.c != 0) be.c.push_back(t);
        }
        std::sort(be.c.begin(), be.c.end(), [](const Term& a, const Term& b) { return a.k < b.k; });
        entries.push_back(std::move(be));
    }

    AlgebraDoc doc;
    doc.algebra = LieAlgebra(std::move(labels), entries);
    if (j.contains("splitting")) {
        Splitting s;
        s.levi = j["splitting"].at("levi").get<std::vector<int>>();
        s.ideal = j["splitting"].at("ideal").get<std::vector<int>>();
        doc.splitting = std::move(s);
    }
    return doc;
}

AlgebraDoc load_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return algebra_from_json(ss.str());
}

void save_algebra_file(const AlgebraDoc& doc, const std::string& path, bool pretty) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << algebra_to_json(doc, pretty) << "\n";
}

}  // namespace lie
