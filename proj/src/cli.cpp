#include "padic/cli.hpp"

#include <optional>
#include <new>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "padic/addition.hpp"
#include "padic/digits.hpp"
#include "padic/multiplication.hpp"
#include "padic/negation.hpp"
#include "padic/transform.hpp"
#include "padic/verify.hpp"
#include "padic/witt.hpp"

namespace padic::cli {

namespace {

struct Options {
    long long p = 0;
    std::string system = "lsr";
    std::optional<std::size_t> precision;
    std::vector<std::string> operands;

    std::string from;
    std::string to;

    std::string op;
    std::size_t cases = 100;
    std::uint64_t seed = 0;
    unsigned t = 0;

    bool oracle = false;
    bool balanced = false;
};

DigitSeq read_operand(const Options& o, const std::string& text, ResidueSystem system)
{
    DigitSeq d = parse_digits(text, Prime(o.p), system);
    if (o.precision && d.precision() != *o.precision) {
        throw std::invalid_argument("operand '" + text + "' has " + std::to_string(d.precision())
                                    + " digits but --precision is " + std::to_string(*o.precision));
    }
    return d;
}

void require_operands(const Options& o, std::size_t count)
{
    if (o.operands.size() != count) {
        throw std::invalid_argument("expected " + std::to_string(count) + " digit operand(s), got "
                                    + std::to_string(o.operands.size()));
    }
}

int arithmetic(ArithOp op, const Options& o, std::ostream& out)
{
    const std::size_t arity = op == ArithOp::neg ? 1 : 2;
    require_operands(o, arity);
    const ResidueSystem system = parse_residue_system(o.system);
    const DigitSeq a = read_operand(o, o.operands[0], system);
    const DigitSeq b = arity == 2 ? read_operand(o, o.operands[1], system)
                                  : DigitSeq::zero(a.prime(), a.precision(), system);
    out << format_digits(apply_formula(op, a, b)) << '\n';
    return kExitOk;
}

int convert(const Options& o, std::ostream& out)
{
    require_operands(o, 1);
    const ResidueSystem from = parse_residue_system(o.from);
    const ResidueSystem to = parse_residue_system(o.to);
    const DigitSeq d = read_operand(o, o.operands[0], from);
    if (from == to) {
        out << format_digits(d) << '\n';
        return kExitOk;
    }
    out << format_digits(to == ResidueSystem::nlr ? lsr_to_nlr(d) : nlr_to_lsr(d)) << '\n';
    return kExitOk;
}

WittVector read_witt(const Options& o, const std::string& text)
{
    const Prime p(o.p);
    if (o.balanced) {
        const DigitSeq d = parse_digits(text, p, p.is_odd() ? ResidueSystem::nlr : ResidueSystem::lsr);
        return WittVector::from_balanced(p, d.digits());
    }
    const DigitSeq d = parse_digits(text, p, ResidueSystem::lsr);
    return WittVector(p, {d.digits().begin(), d.digits().end()});
}

int witt(WittOp op, const Options& o, std::ostream& out)
{
    const std::size_t arity = op == WittOp::neg ? 1 : 2;
    require_operands(o, arity);
    const WittVector a = read_witt(o, o.operands[0]);
    const std::optional<WittVector> b =
        arity == 2 ? std::optional<WittVector>(read_witt(o, o.operands[1])) : std::nullopt;
    if (b && b->length() != a.length())
        throw std::invalid_argument("Witt operands differ in length");

    WittVector result = a;
    if (o.oracle) {
        result = witt_ghost_op(op, a, b);
    } else if (o.p == 2) {
        result = op == WittOp::add ? witt_add_f2(a, *b) : op == WittOp::neg ? witt_neg_f2(a) : witt_mul_f2(a, *b);
    } else if (o.p == 3) {
        result = op == WittOp::add ? witt_add_f3(a, *b) : op == WittOp::neg ? witt_neg_f3(a) : witt_mul_f3(a, *b);
    } else {
        throw std::invalid_argument("closed Witt formulas exist for p = 2 and p = 3 only; use --oracle");
    }
    out << (o.balanced ? format_digits(result.balanced()) : format_digits(result.components())) << '\n';
    return kExitOk;
}

std::string render_partition(const TpPartition& part)
{
    std::string s = "(";
    for (std::size_t m = 0; m < part.levels.size(); ++m) {
        if (m)
            s += ',';
        s += '(' + format_digits(part.levels[m]) + ')';
    }
    return s + ')';
}

int partitions(const Options& o, std::ostream& out)
{
    const auto parts = enumerate_tp_partitions(Prime(o.p), o.t);
    out << parts.size() << '\n';
    for (const auto& part : parts)
        out << render_partition(part) << '\n';
    return kExitOk;
}

int verify(const Options& o, std::ostream& out)
{
    VerifyConfig config;
    config.p = Prime(o.p);
    config.system = parse_residue_system(o.system);
    config.op = parse_arith_op(o.op);
    config.cases = o.cases;
    config.precision = o.precision.value_or(8);
    config.seed = o.seed;

    const VerifyReport report = run_verify(config);
    if (!report.mismatch) {
        out << "OK " << report.cases << '\n';
        return kExitOk;
    }
    const Counterexample& ce = *report.mismatch;
    out << "MISMATCH case " << ce.index << ": a=" << format_digits(ce.a);
    if (config.op != ArithOp::neg)
        out << " b=" << format_digits(ce.b);
    out << " formula=" << format_digits(ce.formula) << " oracle=" << format_digits(ce.oracle) << '\n';
    return kExitMismatch;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Explicit digit formulas for p-adic integer and Witt vector arithmetic", "padic"};
    app.require_subcommand(1);

    auto add_prime = [&](CLI::App* sub) { sub->add_option("--p", o.p, "prime p")->required(); };
    auto add_system = [&](CLI::App* sub) {
        sub->add_option("--system", o.system, "residue system")->check(CLI::IsMember({"lsr", "nlr"}));
    };
    auto add_precision = [&](CLI::App* sub) {
        sub->add_option("--precision", o.precision, "number of digits")->check(CLI::PositiveNumber);
    };

    auto* add = app.add_subcommand("add", "digits of a + b");
    auto* neg = app.add_subcommand("neg", "digits of -a");
    auto* mul = app.add_subcommand("mul", "digits of a * b");
    for (auto* sub : {add, neg, mul}) {
        add_prime(sub);
        add_system(sub);
        add_precision(sub);
        sub->add_option("digits", o.operands, "operands as d0,d1,...,dt (least significant first)")->required();
    }

    auto* conv = app.add_subcommand("convert", "rewrite digits in the other residue system");
    add_prime(conv);
    add_precision(conv);
    conv->add_option("--from", o.from, "source system")->required()->check(CLI::IsMember({"lsr", "nlr"}));
    conv->add_option("--to", o.to, "target system")->required()->check(CLI::IsMember({"lsr", "nlr"}));
    conv->add_option("digits", o.operands, "digits to convert")->required();

    auto* wit = app.add_subcommand("witt", "Witt vector arithmetic over F_p");
    wit->require_subcommand(1);
    std::vector<std::pair<CLI::App*, WittOp>> witt_ops;
    for (auto [name, op] : {std::pair{"add", WittOp::add}, {"neg", WittOp::neg}, {"mul", WittOp::mul}}) {
        auto* sub = wit->add_subcommand(name, std::string("Witt ") + name);
        add_prime(sub);
        sub->add_flag("--oracle", o.oracle, "use the ghost-component recursion (any p)");
        sub->add_flag("--balanced", o.balanced, "read and print components in {-(p-1)/2..(p-1)/2}");
        sub->add_option("components", o.operands, "components a0,a1,...")->required();
        witt_ops.emplace_back(sub, op);
    }

    auto* part = app.add_subcommand("partitions", "list the T_p-partitions of p^t");
    add_prime(part);
    part->add_option("--t", o.t, "exponent t")->required();

    auto* ver = app.add_subcommand("verify", "differential test of the formulas against big integers");
    add_prime(ver);
    add_system(ver);
    add_precision(ver);
    ver->add_option("--op", o.op, "operation")->required()->check(CLI::IsMember({"add", "neg", "mul"}));
    ver->add_option("--cases", o.cases, "number of random cases");
    ver->add_option("--seed", o.seed, "random seed");

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (add->parsed())
            return arithmetic(ArithOp::add, o, out);
        if (neg->parsed())
            return arithmetic(ArithOp::neg, o, out);
        if (mul->parsed())
            return arithmetic(ArithOp::mul, o, out);
        if (conv->parsed())
            return convert(o, out);
        for (auto [sub, op] : witt_ops) {
            if (sub->parsed())
                return witt(op, o, out);
        }
        if (part->parsed())
            return partitions(o, out);
        if (ver->parsed())
            return verify(o, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::overflow_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::bad_alloc&) {
        err << "error: out of memory (the partition set for this p and precision is too large)\n";
        return kExitUsage;
    }
    err << "error: no subcommand\n";
    return kExitUsage;
}

} // namespace padic::cli
