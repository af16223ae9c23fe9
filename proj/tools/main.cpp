#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "bier/cli.hpp"

namespace {

std::string read_source(const std::string& path)
{
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Bier balls and spheres of multicomplexes"};
    std::string command, path, inline_text, method = "facet", field = "q", verify = "auto", out = "text";
    std::vector<int> cap;
    bier::JobSpec job;

    app.add_option("command", command, "operation to run")
        ->required()
        ->check(CLI::IsMember(bier::command_names()));
    app.add_option("input", path, "input file, '-' for stdin");
    app.add_option("-e,--inline", inline_text, "input document given on the command line");
    app.add_option("--cap", cap, "cap for ideal inputs");
    app.add_option("--method", method, "facet|boundary");
    app.add_option("--field", field, "q or p:<prime>");
    app.add_option("--verify", verify, "on|off|auto");
    app.add_option("--budget", job.budget, "search step limit");
    app.add_option("--out", out, "text|machine");
    app.add_option("--n", job.n, "verify-all: number of variables");
    app.add_option("--cmax", job.cmax, "verify-all: largest cap entry");
    CLI11_PARSE(app, argc, argv);

    try {
        job.command = command;
        job.method = bier::parse_method(method);
        job.field = bier::parse_field(field);
        job.verify = bier::parse_verify(verify);
        job.out = bier::parse_format(out);
        if (!cap.empty()) job.cap = cap;
        if (command != "verify-all") {
            if (path.empty() == inline_text.empty()) throw std::runtime_error("give exactly one of an input file or --inline");
            job.input = path.empty() ? inline_text : read_source(path);
        }
    }
    catch (const std::exception& e) {
        std::cerr << "bier: " << e.what() << '\n';
        return 2;
    }

    const auto result = bier::run(job);
    std::cout << result.output;
    if (!result.error.empty()) std::cerr << "bier: " << result.error << '\n';
    return result.exit_code;
}
