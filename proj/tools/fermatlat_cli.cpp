// Command-line front end. Talks to the library exclusively through the
// C API in fermatlat.h.

#include "fermatlat.h"

#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string take_string(char* s) {
    if (!s)
        throw std::runtime_error("library returned no output");
    std::string out(s);
    fermatlat_string_free(s);
    return out;
}

bool is_prime(long n) {
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    for (long d = 3; d * d <= n; d += 2)
        if (n % d == 0)
            return false;
    return true;
}

std::pair<long, long> parse_range(const std::string& text) {
    const auto pos = text.find("..");
    if (pos == std::string::npos)
        throw UsageError("range must look like 5..50");
    try {
        const long a = std::stol(text.substr(0, pos));
        const long b = std::stol(text.substr(pos + 2));
        if (a > b)
            throw UsageError("range bounds out of order: " + text);
        return {a, b};
    } catch (const std::logic_error&) {
        throw UsageError("range must look like 5..50");
    }
}

std::vector<long> primes_in(long lo, long hi) {
    std::vector<long> out;
    for (long p = std::max(lo, 5L); p <= hi; ++p)
        if (is_prime(p))
            out.push_back(p);
    return out;
}

unsigned sweep_threads() {
    if (const char* env = std::getenv("ARAKELOV_SWEEP_THREADS")) {
        const long n = std::strtol(env, nullptr, 10);
        if (n >= 1)
            return static_cast<unsigned>(n);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// Runs fn(p) for each prime on a small pool; results come back in input
// order so the output stays deterministic.
std::vector<std::string> ordered_parallel(const std::vector<long>& primes,
                                          std::string (*fn)(long, bool), bool flag) {
    std::vector<std::string> results(primes.size());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::string first_error;
    std::mutex error_mutex;
    const unsigned workers = std::min<std::size_t>(sweep_threads(), primes.size());
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < std::max(1u, workers); ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < primes.size(); i = next.fetch_add(1)) {
                try {
                    results[i] = fn(primes[i], flag);
                } catch (const std::exception& e) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!failed.exchange(true))
                        first_error = e.what();
                }
            }
        });
    for (auto& t : pool)
        t.join();
    if (failed)
        throw std::runtime_error(first_error);
    return results;
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os)
        throw std::runtime_error("cannot open " + out_path);
    os << text;
}

void require_prime_status(fermatlat_status status) {
    if (status == FERMATLAT_OK)
        return;
    if (status == FERMATLAT_ERR_NOT_PRIME || status == FERMATLAT_ERR_BAD_SPLIT ||
        status == FERMATLAT_ERR_BAD_ARGUMENT)
        throw UsageError(fermatlat_last_error());
    throw std::runtime_error(fermatlat_last_error());
}

int cmd_model(long p, const std::string& format, const std::string& out_path) {
    fermatlat_model* model = nullptr;
    require_prime_status(fermatlat_model_build(p, &model));
    std::string text;
    if (format == "json")
        text = take_string(fermatlat_model_json(model));
    else if (format == "dot")
        text = take_string(fermatlat_model_dot(model));
    else {
        fermatlat_model_free(model);
        throw UsageError("model supports --format json or dot");
    }
    fermatlat_model_free(model);
    if (format == "json")
        text += "\n";
    write_output(text, out_path);
    return kExitOk;
}

int cmd_bound(long p, const std::string& kind, bool folded, const std::string& format,
              const std::string& out_path) {
    if (kind != "regular" && kind != "minimal")
        throw UsageError("--kind must be regular or minimal");
    if (folded && kind != "minimal")
        throw UsageError("--folded applies to --kind minimal");
    if (format != "text" && format != "json")
        throw UsageError("bound supports --format text or json");
    fermatlat_bound* bound = nullptr;
    require_prime_status(fermatlat_bound_compute(p, kind == "minimal" ? 1 : 0, folded ? 1 : 0,
                                                 &bound));
    std::string text = format == "json" ? take_string(fermatlat_bound_json(bound))
                                        : take_string(fermatlat_bound_text(bound));
    fermatlat_bound_free(bound);
    write_output(text + "\n", out_path);
    return kExitOk;
}

std::string verify_row(long p, bool inject_fault) {
    fermatlat_report* report = nullptr;
    require_prime_status(fermatlat_verify_prime(p, inject_fault ? 1 : 0, &report));
    std::string row = take_string(fermatlat_report_row(report));
    const bool ok = fermatlat_report_ok(report) != 0;
    fermatlat_report_free(report);
    return (ok ? "+" : "-") + row;
}

std::string verify_json(long p, bool inject_fault) {
    fermatlat_report* report = nullptr;
    require_prime_status(fermatlat_verify_prime(p, inject_fault ? 1 : 0, &report));
    std::string j = take_string(fermatlat_report_json(report));
    const bool ok = fermatlat_report_ok(report) != 0;
    fermatlat_report_free(report);
    return (ok ? "+" : "-") + j;
}

int cmd_verify(const std::vector<long>& primes, bool inject_fault, const std::string& format,
               const std::string& out_path) {
    if (format != "text" && format != "json")
        throw UsageError("verify supports --format text or json");
    const auto rows = ordered_parallel(primes, format == "json" ? verify_json : verify_row,
                                       inject_fault);
    bool all_ok = true;
    std::ostringstream os;
    if (format == "text") {
        os << std::setw(6) << "p" << std::setw(5) << "r" << std::setw(5) << "s" << "  "
           << std::left << std::setw(12) << "a_p" << std::right << "result" << "\n";
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
        all_ok = all_ok && rows[i].front() == '+';
        if (format == "json")
            os << (i ? ",\n" : "[") << rows[i].substr(1);
        else
            os << rows[i].substr(1) << "\n";
    }
    if (format == "json")
        os << (rows.empty() ? "[]" : "]") << "\n";
    write_output(os.str(), out_path);
    return all_ok ? kExitOk : kExitVerifyFailed;
}

std::string sweep_row(long p, bool as_json) {
    char *regular = nullptr, *minimal = nullptr, *folded = nullptr;
    require_prime_status(fermatlat_bound_coeffs(p, &regular, &minimal, &folded));
    const std::string coeffs[3] = {take_string(regular), take_string(minimal),
                                   take_string(folded)};
    std::ostringstream os;
    if (as_json) {
        os << "{\"p\":" << p << ",\"regular\":\"" << coeffs[0] << "\",\"minimal\":\"" << coeffs[1]
           << "\",\"folded\":\"" << coeffs[2] << "\"}";
    } else {
        os << std::setw(6) << p << "  " << std::left << std::setw(12) << coeffs[0] << std::setw(12)
           << coeffs[1] << coeffs[2] << std::right;
    }
    return os.str();
}

int cmd_sweep(const std::vector<long>& primes, const std::string& format,
              const std::string& out_path) {
    if (format != "text" && format != "json")
        throw UsageError("sweep supports --format text or json");
    const auto rows = ordered_parallel(primes, sweep_row, format == "json");
    std::ostringstream os;
    if (format == "text")
        os << std::setw(6) << "p" << "  " << std::left << std::setw(12) << "regular"
           << std::setw(12) << "minimal" << "folded" << std::right << "\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (format == "json")
            os << (i ? ",\n" : "[") << rows[i];
        else
            os << rows[i] << "\n";
    }
    if (format == "json")
        os << (rows.empty() ? "[]" : "]") << "\n";
    write_output(os.str(), out_path);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact special-fibre intersection numbers for prime-exponent Fermat curves"};
    app.require_subcommand(1);

    long p = 0;
    std::string range_text;
    std::string kind = "regular";
    std::string format;
    std::string out_path;
    bool folded = false;
    bool inject_fault = false;

    auto* model_cmd = app.add_subcommand("model", "emit the special-fibre configuration");
    model_cmd->add_option("--p", p, "prime exponent")->required();
    model_cmd->add_option("--format", format, "json|dot")->default_val("json");
    model_cmd->add_option("--out", out_path, "write output to a file");

    auto* verify_cmd = app.add_subcommand("verify", "run the identity suite over primes");
    verify_cmd->add_option("--p", p, "single prime");
    verify_cmd->add_option("--p-range", range_text, "inclusive range, e.g. 5..50");
    verify_cmd->add_option("--format", format, "text|json")->default_val("text");
    verify_cmd->add_option("--out", out_path, "write output to a file");
    verify_cmd->add_flag("--inject-fault", inject_fault, "corrupt the fibre to test detection")
        ->group("");

    auto* bound_cmd = app.add_subcommand("bound", "emit an upper-bound expression");
    bound_cmd->add_option("--p", p, "prime exponent")->required();
    bound_cmd->add_option("--kind", kind, "regular|minimal")->default_val("regular");
    bound_cmd->add_flag("--folded", folded, "substitute the cyclotomic discriminant");
    bound_cmd->add_option("--format", format, "text|json")->default_val("text");
    bound_cmd->add_option("--out", out_path, "write output to a file");

    auto* sweep_cmd = app.add_subcommand("sweep", "tabulate bound coefficients over primes");
    sweep_cmd->add_option("--p", p, "single prime");
    sweep_cmd->add_option("--p-range", range_text, "inclusive range, e.g. 5..50");
    sweep_cmd->add_option("--format", format, "text|json")->default_val("text");
    sweep_cmd->add_option("--out", out_path, "write output to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e); // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        const auto gather_primes = [&](CLI::App* cmd) {
            std::vector<long> primes;
            const bool has_p = cmd->count("--p") > 0;
            const bool has_range = cmd->count("--p-range") > 0;
            if (has_p == has_range)
                throw UsageError("give exactly one of --p or --p-range");
            if (has_p) {
                if (!is_prime(p))
                    throw UsageError(std::to_string(p) + " is not prime");
                if (p <= 3)
                    throw UsageError("p must be a prime greater than 3");
                primes.push_back(p);
            } else {
                const auto [lo, hi] = parse_range(range_text);
                primes = primes_in(lo, hi);
            }
            return primes;
        };

        if (model_cmd->parsed())
            return cmd_model(p, format, out_path);
        if (bound_cmd->parsed())
            return cmd_bound(p, kind, folded, format, out_path);
        if (verify_cmd->parsed())
            return cmd_verify(gather_primes(verify_cmd), inject_fault, format, out_path);
        if (sweep_cmd->parsed())
            return cmd_sweep(gather_primes(sweep_cmd), format, out_path);
        throw UsageError("no subcommand");
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFailed;
    }
}
