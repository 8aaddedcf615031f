#pragma once

#include <string>
#include <vector>

#include "evanescent/app/config.hpp"
#include "evanescent/app/csv.hpp"
#include "evanescent/dipole.hpp"

namespace evanescent::app {

enum class FigureId { Fig2, Fig3, Fig4, Fig5, Fig6a, Fig6b, Fig7a, Fig7b };

FigureId parse_figure_id(const std::string& text);
const char* to_string(FigureId id);

// Default coil: 10 turns of radius 1 mm carrying 3e9 statA.
double default_coil_moment();

// Figure defaults that `cfg` does not override.
std::vector<double> default_frequencies(FigureId id);
std::vector<double> default_positions(FigureId id);

// Models selected by cfg, or all three; nonlocal is dropped (with a note)
// when the material has no Fermi velocity.
std::vector<ResponseModel> selected_models(const RunConfig& cfg, std::vector<std::string>* notes);

// Total field at (x, 0, z) above the plate for the configured material.
FieldSample field_at(const RunConfig& cfg, ResponseModel kind, double omega_d, double x, double m0);

CsvTable run_figure(FigureId id, const RunConfig& cfg, const Settings& settings);

// Free-form sweep over x (fixed frequencies) or omega (fixed positions),
// reporting every field component.
CsvTable run_sweep(const RunConfig& cfg, const Settings& settings);

}  // namespace evanescent::app
