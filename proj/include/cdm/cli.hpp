#pragma once

#include <string>
#include <vector>

#include "cdm/dipole.hpp"
#include "cdm/errors.hpp"
#include "cdm/pipeline.hpp"
#include "cdm/window.hpp"

namespace cdm {

enum class Detector { Dipole, Sobel, Laplace, Gradient };

struct RunConfig {
    std::string input;
    std::string output;
    Detector detector = Detector::Dipole;
    WindowSpec window;       // rows/cols plus border, charge mode, normalization
    RenderParams render;     // alpha, gain, bias, pmax policy
    Engine engine = Engine::Fast;
    std::string dump_path;   // empty when no dump requested
    std::vector<int> sweep;  // empty when no sweep requested
    bool gray = false;
};

/// Thrown instead of returning a config when --help is requested; carries the
/// help text so the caller can print it and exit cleanly.
struct HelpRequested {
    std::string text;
};

/// Parses argv-style arguments (program name excluded). Throws UsageError
/// with a diagnostic naming the offending flag.
RunConfig parse_args(std::vector<std::string> args);

/// Decode -> detect -> render -> encode. With a sweep, writes one map per
/// window size with the size suffixed to the output name; with a dump path,
/// also writes the raw moment planes. Prints a one-line timing report
/// (decode / compute / encode milliseconds) to standard error.
void run(const RunConfig& config);

/// Complete front end: parse + run. Returns 0 on success, 2 on a usage
/// error, 1 on any other failure; diagnostics go to standard error.
int cli_main(std::vector<std::string> args);

}  // namespace cdm
