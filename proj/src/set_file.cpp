#include "cfl/set_file.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "cfl/error.hpp"

namespace cfl {

namespace {

std::vector<std::string> split_words(std::string_view s) {
    std::vector<std::string> out;
    std::istringstream in{std::string(s)};
    for (std::string w; in >> w;) out.push_back(w);
    return out;
}

bool valid_element(std::string_view e) {
    return !e.empty() && e.find_first_of("=:#") == std::string_view::npos;
}

class LineParser {
public:
    LineParser(SetLibrary& lib, std::size_t line_no, std::size_t offset)
        : lib_(lib), line_no_(line_no), offset_(offset) {}

    void parse(std::string_view line) {
        auto colon = line.find(':');
        if (colon == std::string_view::npos) fail("missing ':'");
        auto head = split_words(line.substr(0, colon));
        auto body = split_words(line.substr(colon + 1));
        if (head.empty()) fail("missing statement keyword");
        if (head[0] == "universe")
            parse_universe(head, body);
        else if (head[0] == "set")
            parse_set(head, body);
        else
            fail("unknown statement '" + head[0] + "'");
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw SyntaxError("line " + std::to_string(line_no_) + ": " + why, offset_);
    }
    std::string where() const { return "line " + std::to_string(line_no_) + ": "; }

    void parse_universe(const std::vector<std::string>& head, const std::vector<std::string>& body) {
        if (head.size() != 2 || !is_identifier(head[1])) fail("expected 'universe <name>:'");
        if (body.empty()) fail("universe '" + head[1] + "' has no elements");
        for (const auto& e : body)
            if (!valid_element(e)) fail("bad element name '" + e + "'");
        if (lib_.universes.count(head[1])) throw BindingError(where() + "universe '" + head[1] + "' redefined");
        try {
            lib_.universes.emplace(head[1], make_universe(head[1], body));
        } catch (const BindingError& e) {
            throw BindingError(where() + e.what());
        }
    }

    void parse_set(const std::vector<std::string>& head, const std::vector<std::string>& body) {
        if (head.size() != 4 || !is_identifier(head[1]) || head[2] != "in") fail("expected 'set <name> in <universe>:'");
        const std::string& name = head[1];
        auto u = lib_.universes.find(head[3]);
        if (u == lib_.universes.end()) throw BindingError(where() + "unknown universe '" + head[3] + "'");
        if (lib_.sets.count(name)) throw BindingError(where() + "set '" + name + "' redefined");

        const Universe& universe = *u->second;
        std::vector<std::optional<Weight>> weights(universe.size());
        for (const auto& item : body) {
            auto eq = item.find('=');
            if (eq == std::string::npos || eq == 0 || eq + 1 == item.size()) fail("expected element=weight, got '" + item + "'");
            const std::string element = item.substr(0, eq);
            auto index = universe.index_of(element);
            if (!index) throw BindingError(where() + "'" + element + "' is not an element of " + universe.name());
            if (weights[*index]) throw BindingError(where() + "element '" + element + "' assigned twice");
            Rational value;
            try {
                value = parse_rational(item.substr(eq + 1));
            } catch (const SyntaxError& e) {
                fail("bad weight for '" + element + "': " + e.what());
            }
            try {
                weights[*index] = Weight(value);
            } catch (const RangeError& e) {
                throw RangeError(where() + e.what());
            }
        }
        std::vector<Weight> out;
        for (std::size_t i = 0; i < weights.size(); ++i) {
            if (!weights[i])
                throw BindingError(where() + "set '" + name + "' does not assign element '" + universe.elements()[i] + "'");
            out.push_back(*weights[i]);
        }
        lib_.sets.emplace(name, make_set(name, u->second, std::move(out)));
    }

    SetLibrary& lib_;
    std::size_t line_no_;
    std::size_t offset_;
};

}  // namespace

SetLibrary parse_set_file(std::string_view text) {
    SetLibrary lib;
    std::size_t offset = 0;
    std::size_t line_no = 1;
    while (offset <= text.size()) {
        auto end = text.find('\n', offset);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(offset, end - offset);
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        if (line.find_first_not_of(" \t\r") != std::string_view::npos) LineParser(lib, line_no, offset).parse(line);
        offset = end + 1;
        ++line_no;
    }
    return lib;
}

SetLibrary load_set_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw BindingError("cannot open set file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_set_file(buf.str());
}

std::string render_universe_line(const Universe& u) {
    std::string out = "universe " + u.name() + ":";
    for (const auto& e : u.elements()) out += " " + e;
    return out;
}

std::string render_set_line(const FuzzySet& s) {
    std::string out = "set " + s.name() + " in " + s.universe().name() + ":";
    for (std::size_t i = 0; i < s.size(); ++i) out += " " + s.universe().elements()[i] + "=" + s[i].to_string();
    return out;
}

}  // namespace cfl
