#include "ordex/regex.hpp"

#include <map>
#include <tuple>

namespace ordex {

RegexParseError::RegexParseError(const std::string& message, std::size_t offset)
    : std::runtime_error(message + " (offset " + std::to_string(offset) + ")"),
      offset_(offset) {}

namespace {

constexpr std::string_view kMetaChars = "|*()_#";

RegexNodePtr make_node(RegexNode::Kind kind, std::uint8_t symbol = 0, RegexNodePtr left = nullptr,
                       RegexNodePtr right = nullptr) {
    auto node = std::make_shared<RegexNode>();
    node->kind = kind;
    node->symbol = symbol;
    node->left = std::move(left);
    node->right = std::move(right);
    return node;
}

class Parser {
public:
    Parser(std::string_view text, const Alphabet& alphabet) : text_(text), alphabet_(alphabet) {}

    RegexNodePtr parse() {
        RegexNodePtr node = parse_expr();
        if (pos_ < text_.size()) {
            throw RegexParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        }
        return node;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    [[noreturn]] void fail_here(const std::string& message) {
        throw RegexParseError(message, pos_);
    }

    RegexNodePtr parse_expr() {
        RegexNodePtr node = parse_term();
        while (!at_end() && peek() == '|') {
            ++pos_;
            RegexNodePtr rhs = parse_term();
            node = make_node(RegexNode::Kind::Union, 0, std::move(node), std::move(rhs));
        }
        return node;
    }

    bool starts_atom() const {
        if (at_end()) {
            return false;
        }
        char c = peek();
        return c == '(' || c == '_' || c == '#' || kMetaChars.find(c) == std::string_view::npos;
    }

    RegexNodePtr parse_term() {
        RegexNodePtr node = parse_factor();
        while (starts_atom()) {
            RegexNodePtr rhs = parse_factor();
            node = make_node(RegexNode::Kind::Concat, 0, std::move(node), std::move(rhs));
        }
        return node;
    }

    RegexNodePtr parse_factor() {
        RegexNodePtr node = parse_atom();
        while (!at_end() && peek() == '*') {
            ++pos_;
            node = make_node(RegexNode::Kind::Star, 0, std::move(node));
        }
        return node;
    }

    RegexNodePtr parse_atom() {
        if (at_end()) {
            fail_here("unexpected end of pattern");
        }
        char c = peek();
        if (c == '_') {
            ++pos_;
            return make_node(RegexNode::Kind::Epsilon);
        }
        if (c == '#') {
            ++pos_;
            return make_node(RegexNode::Kind::EmptyLang);
        }
        if (c == '(') {
            std::size_t open = pos_;
            ++pos_;
            RegexNodePtr inner;
            try {
                inner = parse_expr();
            } catch (const RegexParseError& e) {
                if (e.offset() >= text_.size()) {
                    throw RegexParseError("unclosed '('", open);
                }
                throw;
            }
            if (at_end()) {
                throw RegexParseError("unclosed '('", open);
            }
            if (peek() != ')') {
                fail_here(std::string("unexpected '") + peek() + "'");
            }
            ++pos_;
            return inner;
        }
        if (kMetaChars.find(c) != std::string_view::npos) {
            fail_here(std::string("unexpected '") + c + "'");
        }
        auto idx = alphabet_.index_of(c);
        if (!idx) {
            fail_here(std::string("symbol '") + c + "' not in alphabet \"" + alphabet_.symbols() +
                      "\"");
        }
        ++pos_;
        return make_node(RegexNode::Kind::Symbol, *idx);
    }

    std::string_view text_;
    const Alphabet& alphabet_;
    std::size_t pos_ = 0;
};

/// Span matcher with memoisation. Star splits off a nonempty head, so the
/// recursion strictly shrinks the span and terminates.
class SpanMatcher {
public:
    explicit SpanMatcher(const Word& word) : word_(word) {}

    bool match(const RegexNode* node, std::size_t i, std::size_t j) {
        auto key = std::tuple(node, i, j);
        auto it = memo_.find(key);
        if (it != memo_.end()) {
            return it->second;
        }
        bool result = false;
        switch (node->kind) {
            case RegexNode::Kind::EmptyLang:
                result = false;
                break;
            case RegexNode::Kind::Epsilon:
                result = i == j;
                break;
            case RegexNode::Kind::Symbol:
                result = j == i + 1 && word_.indices[i] == node->symbol;
                break;
            case RegexNode::Kind::Union:
                result = match(node->left.get(), i, j) || match(node->right.get(), i, j);
                break;
            case RegexNode::Kind::Concat:
                for (std::size_t m = i; m <= j && !result; ++m) {
                    result = match(node->left.get(), i, m) && match(node->right.get(), m, j);
                }
                break;
            case RegexNode::Kind::Star:
                if (i == j) {
                    result = true;
                } else {
                    for (std::size_t m = i + 1; m <= j && !result; ++m) {
                        result = match(node->left.get(), i, m) && match(node, m, j);
                    }
                }
                break;
        }
        memo_.emplace(key, result);
        return result;
    }

private:
    const Word& word_;
    std::map<std::tuple<const RegexNode*, std::size_t, std::size_t>, bool> memo_;
};

void print_node(const RegexNode* node, const Alphabet& alphabet, std::string& out) {
    switch (node->kind) {
        case RegexNode::Kind::EmptyLang:
            out.push_back('#');
            break;
        case RegexNode::Kind::Epsilon:
            out.push_back('_');
            break;
        case RegexNode::Kind::Symbol:
            out.push_back(alphabet.symbol(node->symbol));
            break;
        case RegexNode::Kind::Union:
            out.push_back('(');
            print_node(node->left.get(), alphabet, out);
            out.push_back('|');
            print_node(node->right.get(), alphabet, out);
            out.push_back(')');
            break;
        case RegexNode::Kind::Concat:
            out.push_back('(');
            print_node(node->left.get(), alphabet, out);
            print_node(node->right.get(), alphabet, out);
            out.push_back(')');
            break;
        case RegexNode::Kind::Star:
            out.push_back('(');
            print_node(node->left.get(), alphabet, out);
            out.append(")*");
            break;
    }
}

}  // namespace

Regex parse_regex(std::string_view pattern, const Alphabet& alphabet) {
    Parser parser(pattern, alphabet);
    return Regex{alphabet, parser.parse()};
}

bool regex_matches(const Regex& regex, const Word& word) {
    if (word.alphabet != regex.alphabet) {
        throw std::invalid_argument("word alphabet does not match the pattern alphabet");
    }
    SpanMatcher matcher(word);
    return matcher.match(regex.root.get(), 0, word.size());
}

std::string regex_to_string(const Regex& regex) {
    std::string out;
    print_node(regex.root.get(), regex.alphabet, out);
    return out;
}

}  // namespace ordex
