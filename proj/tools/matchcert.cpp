#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "matchcert/io.hpp"
#include "matchcert/oracle.hpp"
#include "matchcert/tutte.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;

std::string readFile(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw matchcert::ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string firstLine(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty() && line.find_first_not_of(" \t\r") != std::string::npos) {
            while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
                line.pop_back();
            return line;
        }
    throw matchcert::ParseError("empty input");
}

bool looksLikeEdgeList(const std::string& text) {
    std::string line = firstLine(text);
    return line[0] == '#' || line.rfind("n ", 0) == 0;
}

matchcert::Graph loadGraph(const std::string& path, const std::string& format) {
    std::string text = readFile(path);
    std::string fmt = format;
    if (fmt.empty())
        fmt = looksLikeEdgeList(text) ? "edges" : "g6";
    if (fmt == "edges")
        return matchcert::io::parseEdgeList(text);
    return matchcert::io::parseGraph6(firstLine(text));
}

int runCertify(const std::string& input, const std::string& output, const std::string& format) {
    matchcert::Graph g = loadGraph(input, format);
    matchcert::Certificate cert = matchcert::certify(g);
    std::string doc = matchcert::io::emitCertificate(g, cert);
    if (output.empty()) {
        std::cout << doc;
    } else {
        std::ofstream out(output);
        if (!out)
            throw matchcert::ParseError("cannot write " + output);
        out << doc;
    }
    return kExitOk;
}

int runVerify(const std::string& input, const std::string& certPath, const std::string& format) {
    matchcert::Graph g = loadGraph(input, format);
    matchcert::Certificate cert = matchcert::io::parseCertificate(readFile(certPath), g);
    if (!matchcert::verifyCertificate(g, cert)) {
        std::cout << "FAIL: certificate does not verify\n";
        return kExitVerifyFailed;
    }
    std::cout << "OK: "
              << (cert.kind == matchcert::Certificate::Kind::PerfectMatching ? "perfect_matching"
                                                                             : "tutte_violator")
              << "\n";
    return kExitOk;
}

int runOracle(const std::string& input, bool count, const std::string& format) {
    matchcert::Graph g = loadGraph(input, format);
    auto pm = matchcert::oracle::bruteForcePerfectMatching(g);
    if (pm) {
        std::cout << "perfect matching exists";
        if (count)
            std::cout << " (count " << matchcert::oracle::countPerfectMatchings(g) << ")";
        std::cout << "\n";
    } else {
        auto u = matchcert::oracle::bruteForceViolator(g);
        std::cout << "no perfect matching; violator {";
        if (u)
            for (std::size_t i = 0; i < u->size(); ++i)
                std::cout << (i ? "," : "") << (*u)[i];
        std::cout << "}\n";
    }
    return kExitOk;
}

int runBatch(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw matchcert::ParseError("cannot open " + path);
    std::string line;
    int lineNo = 0;
    int bad = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
            line.pop_back();
        if (line.empty())
            continue;
        try {
            matchcert::Graph g = matchcert::io::parseGraph6(line);
            matchcert::Certificate c = matchcert::certify(g);
            std::cout << lineNo << "\t" << line << "\tn=" << g.vertexCount() << "\t";
            if (c.kind == matchcert::Certificate::Kind::PerfectMatching) {
                std::cout << "perfect_matching";
            } else {
                std::cout << "tutte_violator {";
                for (std::size_t i = 0; i < c.violator.size(); ++i)
                    std::cout << (i ? "," : "") << c.violator[i];
                std::cout << "}";
            }
            std::cout << "\n";
        } catch (const matchcert::Error& e) {
            ++bad;
            std::cout << lineNo << "\t" << line << "\tERROR: " << e.what() << "\n";
        }
    }
    std::cout << "# " << bad << " malformed line(s)\n";
    return bad == 0 ? kExitOk : kExitVerifyFailed;
}

int runSelftest(int maxN) {
    std::mt19937 rng(20240716u);
    long long checked = 0;
    for (int n = 0; n <= maxN; ++n) {
        const int pairs = n * (n - 1) / 2;
        long long failures = 0;
        long long total = 0;
        auto checkOne = [&](const matchcert::Graph& g) {
            ++total;
            matchcert::Certificate c = matchcert::certify(g);
            bool ok = matchcert::verifyCertificate(g, c);
            bool hasPm = matchcert::oracle::bruteForcePerfectMatching(g).has_value();
            ok = ok && (hasPm == (c.kind == matchcert::Certificate::Kind::PerfectMatching));
            if (!ok)
                ++failures;
        };
        if (pairs <= 10) { // exhaustive up to n = 5
            for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << pairs); ++mask) {
                std::vector<std::pair<int, int>> edges;
                int k = 0;
                for (int v = 1; v < n; ++v)
                    for (int u = 0; u < v; ++u, ++k)
                        if (mask & (std::uint32_t{1} << k))
                            edges.emplace_back(u, v);
                checkOne(matchcert::Graph::fromEdges(n, edges));
            }
        } else {
            std::uniform_real_distribution<double> prob(0.0, 1.0);
            for (int t = 0; t < 2000; ++t) {
                double p = prob(rng);
                std::vector<std::pair<int, int>> edges;
                for (int v = 1; v < n; ++v)
                    for (int u = 0; u < v; ++u)
                        if (prob(rng) < p)
                            edges.emplace_back(u, v);
                checkOne(matchcert::Graph::fromEdges(n, edges));
            }
        }
        checked += total;
        std::cout << "n=" << n << ": " << total << " graphs, " << failures << " failure(s)\n";
        if (failures > 0)
            return kExitVerifyFailed;
    }
    std::cout << "selftest passed on " << checked << " graphs\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tutte dichotomy certifier: emits and checks perfect-matching / "
                 "Tutte-violator certificates"};
    app.require_subcommand(1);

    std::string input, output, certPath, format;
    bool count = false;
    int maxN = 8;

    auto* certify = app.add_subcommand("certify", "Certify a graph");
    certify->add_option("input", input, "graph file (graph6 or edge list)")->required();
    certify->add_option("-o,--output", output, "write the certificate to a file");
    certify->add_option("--format", format, "input format: g6 or edges")
        ->check(CLI::IsMember({"g6", "edges"}));

    auto* verify = app.add_subcommand("verify", "Verify a certificate against a graph");
    verify->add_option("input", input, "graph file")->required();
    verify->add_option("certificate", certPath, "certificate JSON file")->required();
    verify->add_option("--format", format, "input format: g6 or edges")
        ->check(CLI::IsMember({"g6", "edges"}));

    auto* oracle = app.add_subcommand("oracle", "Brute-force ground truth for a graph");
    oracle->add_option("input", input, "graph file")->required();
    oracle->add_flag("--count", count, "also count perfect matchings");
    oracle->add_option("--format", format, "input format: g6 or edges")
        ->check(CLI::IsMember({"g6", "edges"}));

    auto* batch = app.add_subcommand("batch", "Certify every graph6 line of a file");
    batch->add_option("input", input, "file of graph6 lines")->required();

    auto* selftest = app.add_subcommand("selftest", "Run the dichotomy sweep");
    selftest->add_option("--max-n", maxN, "largest vertex count to sweep")->check(CLI::Range(0, 12));

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(certify))
            return runCertify(input, output, format);
        if (app.got_subcommand(verify))
            return runVerify(input, certPath, format);
        if (app.got_subcommand(oracle))
            return runOracle(input, count, format);
        if (app.got_subcommand(batch))
            return runBatch(input);
        if (app.got_subcommand(selftest))
            return runSelftest(maxN);
    } catch (const matchcert::InvalidCertificateError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFailed;
    } catch (const matchcert::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
