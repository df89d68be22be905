#pragma once

#include <map>
#include <string>
#include <vector>

namespace flowcent {

struct ExampleCheck {
    std::string figure;
    std::string assertion;
    std::string expected;
    std::string actual;
    bool passed = false;
};

struct ExampleReport {
    std::vector<ExampleCheck> checks;

    bool ok() const;
    std::string table() const;
};

// Fixture texts keyed by file name (fig1.net .. fig6.net, fig2.flow).
using FixtureSet = std::map<std::string, std::string>;

// The fixtures compiled into the library.
FixtureSet embedded_fixtures();

// Runs every documented figure assertion. A fixture that fails to parse or a
// computation that throws shows up as a failed check, never as an exception.
ExampleReport run_examples(const FixtureSet& fixtures);

}  // namespace flowcent
