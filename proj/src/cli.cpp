#include "cdm/cli.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <utility>

#include <CLI11.hpp>

#include "cdm/baselines.hpp"
#include "cdm/dump.hpp"
#include "cdm/image_io.hpp"

namespace cdm {

namespace {

int parse_window_dim(const std::string& part, const std::string& text) {
    bool digits = !part.empty() && part.size() <= 5 &&
                  std::all_of(part.begin(), part.end(),
                              [](unsigned char ch) { return std::isdigit(ch) != 0; });
    if (!digits) {
        throw UsageError("--window: expected N or NxM, got '" + text + "'");
    }
    return std::stoi(part);
}

std::pair<int, int> parse_window_text(const std::string& text) {
    auto split = text.find('x');
    if (split == std::string::npos) {
        int n = parse_window_dim(text, text);
        return {n, n};
    }
    return {parse_window_dim(text.substr(0, split), text),
            parse_window_dim(text.substr(split + 1), text)};
}

Detector parse_detector(const std::string& text) {
    if (text == "dipole") return Detector::Dipole;
    if (text == "sobel") return Detector::Sobel;
    if (text == "laplace") return Detector::Laplace;
    if (text == "gradient") return Detector::Gradient;
    throw UsageError("--detector: unknown value '" + text + "'");
}

ChargeMode parse_charge_mode(const std::string& text) {
    if (text == "center") return ChargeMode::CenterMean;
    if (text == "own") return ChargeMode::OwnMean;
    throw UsageError("--charge-mode: unknown value '" + text + "'");
}

Normalization parse_normalization(const std::string& text) {
    if (text == "count") return Normalization::PixelCount;
    if (text == "fourdelta") return Normalization::FourDeltaProduct;
    throw UsageError("--norm: unknown value '" + text + "'");
}

Border parse_border(const std::string& text) {
    if (text == "replicate") return Border::Replicate;
    if (text == "interior") return Border::Interior;
    throw UsageError("--border: unknown value '" + text + "'");
}

PmaxPolicy parse_pmax(const std::string& text) {
    if (text == "channel") return PmaxPolicy::PerChannel;
    if (text == "global") return PmaxPolicy::Global;
    throw UsageError("--pmax: unknown value '" + text + "'");
}

Engine parse_engine(const std::string& text) {
    if (text == "naive") return Engine::Naive;
    if (text == "fast") return Engine::Fast;
    throw UsageError("--engine: unknown value '" + text + "'");
}

BaselineDetector to_baseline(Detector detector) {
    switch (detector) {
        case Detector::Sobel: return BaselineDetector::Sobel;
        case Detector::Laplace: return BaselineDetector::Laplace;
        case Detector::Gradient: return BaselineDetector::Gradient;
        case Detector::Dipole: break;
    }
    throw InvalidArgument("dipole is not a baseline detector");
}

GrayBitmap collapse_gray(const Bitmap& image) {
    GrayBitmap out(image.width, image.height);
    for (int i = 0; i < image.height; ++i) {
        for (int j = 0; j < image.width; ++j) {
            std::uint8_t r = image.at(i, j, 1);
            std::uint8_t g = image.at(i, j, 2);
            std::uint8_t b = image.at(i, j, 3);
            out.at(i, j) =
                (r == g && g == b) ? r : quantize_u8((int(r) + int(g) + int(b)) / 3.0);
        }
    }
    return out;
}

std::string sweep_output_path(const std::string& base, int size) {
    std::filesystem::path path(base);
    std::filesystem::path named =
        path.parent_path() / (path.stem().string() + "_" + std::to_string(size) +
                              path.extension().string());
    return named.string();
}

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

struct Timings {
    double decode_ms = 0.0;
    double compute_ms = 0.0;
    double encode_ms = 0.0;
};

// One detect + encode pass for a fixed window; dump only when dump_path set.
void run_single(const RunConfig& config, const WindowSpec& spec, const Bitmap& image,
                const GrayBitmap& gray_image, const std::string& output_path,
                ImageFormat out_format, bool want_dump, Timings& timings) {
    Bitmap color_map;
    GrayBitmap gray_map;
    FieldDump dump;

    auto compute_start = std::chrono::steady_clock::now();
    if (config.detector == Detector::Dipole) {
        if (config.gray) {
            ChannelMoments moments = gray_moments(gray_image, spec, config.engine);
            gray_map = render_gray_moments(moments, config.render);
            if (want_dump) {
                dump.width = gray_image.width;
                dump.height = gray_image.height;
                dump.channels.push_back(
                    {moments.dipole.px, moments.dipole.py, moments.magnitude});
            }
        } else {
            std::array<ChannelMoments, 3> moments = color_moments(image, spec, config.engine);
            color_map = render_moments(moments, config.render);
            if (want_dump) {
                dump.width = image.width;
                dump.height = image.height;
                for (const ChannelMoments& m : moments) {
                    dump.channels.push_back({m.dipole.px, m.dipole.py, m.magnitude});
                }
            }
        }
    } else {
        BaselineDetector baseline = to_baseline(config.detector);
        if (config.gray) {
            gray_map = run_gray_baseline(gray_image, baseline, config.render);
        } else {
            color_map = run_baseline(image, baseline, config.render);
        }
    }
    timings.compute_ms += ms_since(compute_start);

    auto encode_start = std::chrono::steady_clock::now();
    if (config.gray) {
        save_gray_image(gray_map, output_path, out_format);
    } else {
        save_image(color_map, output_path, out_format);
    }
    if (want_dump) {
        dump_fields(config.dump_path, dump);
    }
    timings.encode_ms += ms_since(encode_start);
}

}  // namespace

RunConfig parse_args(std::vector<std::string> args) {
    RunConfig config;
    std::string window_text = "2";
    std::string detector_text = "dipole";
    std::string charge_text = "center";
    std::string norm_text = "count";
    std::string border_text = "replicate";
    std::string pmax_text = "channel";
    std::string engine_text = "fast";

    CLI::App app{"Color dipole moment edge detector"};
    app.add_option("input", config.input, "Input image (PNG, PPM, or PGM)")->required();
    app.add_option("-o,--output", config.output, "Output image path");
    app.add_option("--detector", detector_text, "dipole, sobel, laplace, or gradient");
    app.add_option("--window", window_text, "Window size, N or NxM (rows x columns)");
    app.add_option("--charge-mode", charge_text, "center or own");
    app.add_option("--norm", norm_text, "count or fourdelta");
    app.add_option("--border", border_text, "replicate or interior");
    app.add_option("--alpha", config.render.alpha, "Tone-curve exponent");
    app.add_option("--gain", config.render.gain, "Tone-curve gain");
    app.add_option("--bias", config.render.bias, "Tone-curve bias");
    app.add_option("--pmax", pmax_text, "channel or global magnitude normalization");
    app.add_option("--engine", engine_text, "naive or fast");
    app.add_option("--dump", config.dump_path, "Also write raw moment planes to this path");
    app.add_option("--sweep", config.sweep, "Comma-separated window sizes, one output each")
        ->delimiter(',');
    app.add_flag("--gray", config.gray, "Collapse the input to one channel");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested{app.help()};
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    config.detector = parse_detector(detector_text);
    config.window.charge_mode = parse_charge_mode(charge_text);
    config.window.normalization = parse_normalization(norm_text);
    config.window.border = parse_border(border_text);
    config.render.pmax_policy = parse_pmax(pmax_text);
    config.engine = parse_engine(engine_text);

    auto [rows, cols] = parse_window_text(window_text);
    config.window.rows = rows;
    config.window.cols = cols;
    if (config.detector == Detector::Dipole && (rows < 2 || cols < 2)) {
        throw UsageError("--window: dipole windows must be at least 2x2");
    }
    if (!(config.render.alpha > 0.0)) {
        throw UsageError("--alpha: must be positive");
    }
    if (!config.sweep.empty()) {
        if (config.detector != Detector::Dipole) {
            throw UsageError("--sweep: only meaningful with the dipole detector");
        }
        if (!config.dump_path.empty()) {
            throw UsageError("--sweep: cannot be combined with --dump");
        }
        std::set<int> seen;
        for (int n : config.sweep) {
            if (n < 2) throw UsageError("--sweep: window sizes must be at least 2");
            if (!seen.insert(n).second) {
                throw UsageError("--sweep: duplicate window size " + std::to_string(n));
            }
        }
    }
    if (!config.dump_path.empty() && config.detector != Detector::Dipole) {
        throw UsageError("--dump: only meaningful with the dipole detector");
    }
    if (config.output.empty()) {
        throw UsageError("--output: an output path is required");
    }
    return config;
}

void run(const RunConfig& config) {
    ImageFormat out_format = format_from_extension(config.output);
    Timings timings;

    auto decode_start = std::chrono::steady_clock::now();
    Bitmap image = load_image(config.input);
    GrayBitmap gray_image;
    if (config.gray) gray_image = collapse_gray(image);
    timings.decode_ms = ms_since(decode_start);

    if (config.sweep.empty()) {
        run_single(config, config.window, image, gray_image, config.output, out_format,
                   !config.dump_path.empty(), timings);
    } else {
        for (int size : config.sweep) {
            WindowSpec spec = config.window;
            spec.rows = size;
            spec.cols = size;
            run_single(config, spec, image, gray_image, sweep_output_path(config.output, size),
                       out_format, false, timings);
        }
    }

    std::ostringstream report;
    report << std::fixed << std::setprecision(3) << "timing: decode " << timings.decode_ms
           << " ms, compute " << timings.compute_ms << " ms, encode " << timings.encode_ms
           << " ms";
    std::cerr << report.str() << std::endl;
}

int cli_main(std::vector<std::string> args) {
    try {
        run(parse_args(std::move(args)));
        return 0;
    } catch (const HelpRequested& help) {
        std::cout << help.text;
        return 0;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << std::endl;
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 1;
    }
}

}  // namespace cdm
