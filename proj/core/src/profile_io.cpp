#include "epvote/profile_io.hpp"

#include <fstream>
#include <sstream>

#include "epvote/errors.hpp"

namespace epvote {

namespace {

[[noreturn]] void fail(int line_no, const std::string& what) {
    throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

std::vector<std::string> tokens_of(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> tokens;
    std::string t;
    while (in >> t) tokens.push_back(t);
    return tokens;
}

bool valid_label(const std::string& label) {
    if (label.empty()) return false;
    for (char c : label)
        if (c == '(' || c == ')' || c == ':' || c == '#' ||
            std::isspace((unsigned char)c))
            return false;
    return true;
}

Candidate parse_candidate_token(const std::string& token, int line_no) {
    Candidate c;
    auto open = token.find('(');
    if (open == std::string::npos) {
        c.label = token;
    } else {
        if (token.back() != ')')
            fail(line_no, "expected ')' in candidate token '" + token + "'");
        c.label = token.substr(0, open);
        std::string cap = token.substr(open + 1, token.size() - open - 2);
        if (cap == "*") {
            c.capacity = std::nullopt;
        } else {
            try {
                size_t used = 0;
                int m = std::stoi(cap, &used);
                if (used != cap.size() || m < 1) throw std::invalid_argument(cap);
                c.capacity = m;
            } catch (const std::exception&) {
                fail(line_no, "bad capacity '" + cap + "'");
            }
        }
    }
    if (!valid_label(c.label))
        fail(line_no, "bad candidate label in token '" + token + "'");
    return c;
}

}  // namespace

Profile parse_profile(std::istream& in) {
    std::vector<Candidate> candidates;
    std::vector<BallotType> ballots;
    bool have_candidates = false;
    std::string line;
    int line_no = 0;

    while (std::getline(in, line)) {
        ++line_no;
        std::string trimmed = line;
        size_t first = trimmed.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (trimmed[first] == '#') continue;
        trimmed = trimmed.substr(first);
        if (!trimmed.empty() && trimmed.back() == '\r') trimmed.pop_back();

        if (!have_candidates) {
            const std::string head = "candidates:";
            if (trimmed.rfind(head, 0) != 0)
                fail(line_no, "expected 'candidates:' before ballot lines");
            for (const std::string& token : tokens_of(trimmed.substr(head.size()))) {
                Candidate c = parse_candidate_token(token, line_no);
                for (const Candidate& prev : candidates)
                    if (prev.label == c.label)
                        fail(line_no, "duplicate candidate label '" + c.label + "'");
                candidates.push_back(std::move(c));
            }
            if (candidates.empty()) fail(line_no, "no candidates declared");
            have_candidates = true;
            continue;
        }

        auto colon = trimmed.find(':');
        if (colon == std::string::npos)
            fail(line_no, "expected '<weight>: <labels>'");
        Rational weight;
        try {
            weight = parse_rational(tokens_of(trimmed.substr(0, colon)).at(0));
        } catch (const std::exception&) {
            fail(line_no, "bad ballot weight '" + trimmed.substr(0, colon) + "'");
        }
        if (sgn(weight) < 0) fail(line_no, "negative ballot weight");

        BallotType b;
        b.weight = weight;
        for (const std::string& token : tokens_of(trimmed.substr(colon + 1))) {
            bool found = false;
            for (const Candidate& c : candidates)
                if (c.label == token) {
                    b.approvals.push_back((int)(&c - candidates.data()));
                    found = true;
                    break;
                }
            if (!found) fail(line_no, "unknown candidate '" + token + "'");
        }
        if (b.approvals.empty()) fail(line_no, "ballot approves nobody");
        ballots.push_back(std::move(b));
    }

    if (!have_candidates) throw ParseError("empty profile: no 'candidates:' line");
    return Profile(std::move(candidates), std::move(ballots));
}

Profile parse_profile_string(const std::string& text) {
    std::istringstream in(text);
    return parse_profile(in);
}

Profile parse_profile_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open profile file '" + path + "'");
    return parse_profile(in);
}

std::string serialize_profile(const Profile& profile) {
    std::ostringstream out;
    out << "candidates:";
    for (const Candidate& c : profile.candidates()) {
        out << ' ' << c.label;
        if (!c.capacity)
            out << "(*)";
        else if (*c.capacity != 1)
            out << '(' << *c.capacity << ')';
    }
    out << '\n';
    for (const BallotType& b : profile.ballots()) {
        out << format_exact(b.weight) << ':';
        for (int id : b.approvals) out << ' ' << profile.label(id);
        out << '\n';
    }
    return out.str();
}

}  // namespace epvote
