/*
 * Conjugacy-class machinery for the two distinguished elements of each case:
 * g, whose conjugates meet every line stabilizer, and h, whose centralizer
 * index bounds the line count. Provides the case classification of a socle
 * descriptor, the exact class size w, the centralizer index c, the 2*w^2*c
 * point-count envelope in both simple and almost-simple modes, and quoted
 * class-size lower bounds inside stabilizer subgroups.
 */
#pragma once

#include "classline/data.hpp"
#include "classline/orders.hpp"

#include <map>
#include <string>

namespace classline {

// Maps a socle descriptor onto its bound-table case; throws
// std::domain_error when no case applies (for example odd-dimensional
// orthogonal groups in even characteristic).
const CaseRow& classify_case(const Socle& s);

struct ElementChoice {
  std::string g_kind;
  std::string h_kind;
  bool h_is_involution = false;
  SignContext signs;
};

// Default choice: free signs are resolved to maximize w.
ElementChoice choose_elements(const Socle& s);
// Pin free signs by token name (+1 / -1 values); unknown or non-free tokens
// raise std::domain_error.
ElementChoice choose_elements(const Socle& s, const std::map<std::string, int>& pinned);

Nat class_size_w(const Socle& s, const ElementChoice& choice);
Nat centralizer_index_c(const Socle& s, const ElementChoice& choice);

enum class BoundMode { Simple, AlmostSimple };

struct VUpper {
  Nat value;      // Simple: exact 2*w^2*c. AlmostSimple: q^(tabulated column).
  Rat exponent;   // the tabulated exponent column for the mode
  Nat w, c;       // exact simple-level ingredients
};
VUpper v_upper(const Socle& s, BoundMode mode);

// Quoted class-size lower bound for the action inside a stabilizer subgroup;
// tag "whole" returns w itself, other tags resolve from the case table.
Nat a_lower(const Socle& s, const std::string& tag, long long m = 0);

}  // namespace classline
