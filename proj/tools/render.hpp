// Text renderings of diagrams and factor tables.
#pragma once

#include <string>

#include "hookbox/identities.hpp"

namespace hookbox::cli {

enum class Format { ascii, json, latex };
enum class Overlay { none, content, hook, arm_leg };
enum class Stage { raw, cancelled, reversed, completed };

Format parse_format(std::string_view text);
Overlay parse_overlay(std::string_view text);
Stage parse_stage(std::string_view text);
std::string to_string(Overlay overlay);
std::string to_string(Stage stage);

std::string render_diagram(const Partition& lambda, Overlay overlay,
                           Format format);
std::string render_table(const EllipticTable& table, Stage stage,
                         Format format);

/// "(1-q^2t^5)".
std::string factor_label(const QTFactor& f);
/// rK+α_ij shorthand for one right-hand-side factor: "2K+a15", "K+a14", "a12".
std::string shorthand_label(std::uint32_t r, int i, int j);

}  // namespace hookbox::cli
