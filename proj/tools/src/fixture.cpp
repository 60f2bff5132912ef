#include "linkform_cli/fixture.hpp"

#include <cctype>
#include <charconv>
#include <vector>

#include "linkform/errors.hpp"

namespace linkform::cli {

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    SimplicialComplex parse()
    {
        auto k = complex();
        skip_space();
        if (pos_ != text_.size())
            fail("trailing characters");
        return k;
    }

private:
    SimplicialComplex complex()
    {
        const std::string name = word();
        expect('(');
        SimplicialComplex out;
        if (name == "sphere") {
            out = sphere(integer());
        } else if (name == "rp") {
            out = rp_space(integer());
        } else if (name == "lens") {
            const int p = integer();
            expect(',');
            out = lens_space(p, integer());
        } else if (name == "susp" || name == "suspension") {
            out = suspension(complex());
        } else if (name == "product") {
            auto a = complex();
            expect(',');
            out = product(a, complex());
        } else {
            fail("unknown generator '" + name + "'");
        }
        expect(')');
        return out;
    }

    std::string word()
    {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected a generator name");
        return text_.substr(start, pos_ - start);
    }

    int integer()
    {
        skip_space();
        int v = 0;
        auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), v);
        if (ec != std::errc())
            fail("expected an integer");
        pos_ = static_cast<std::size_t>(ptr - text_.data());
        return v;
    }

    void expect(char c)
    {
        skip_space();
        if (pos_ >= text_.size() || text_[pos_] != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    [[noreturn]] void fail(const std::string& why) const
    {
        throw ParseError("bad complex expression '" + text_ + "' at " + std::to_string(pos_) + ": " + why);
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

} // namespace

bool is_generator_expression(const std::string& spec)
{
    std::size_t i = 0;
    while (i < spec.size() && std::isspace(static_cast<unsigned char>(spec[i])))
        ++i;
    const std::size_t start = i;
    while (i < spec.size() && std::isalpha(static_cast<unsigned char>(spec[i])))
        ++i;
    const std::string name = spec.substr(start, i - start);
    while (i < spec.size() && std::isspace(static_cast<unsigned char>(spec[i])))
        ++i;
    if (i >= spec.size() || spec[i] != '(')
        return false;
    for (const char* known : {"sphere", "rp", "lens", "susp", "suspension", "product"})
        if (name == known)
            return true;
    return false;
}

SimplicialComplex resolve_complex(const std::string& spec)
{
    if (is_generator_expression(spec))
        return Parser(spec).parse();
    return load_complex_file(spec);
}

} // namespace linkform::cli
