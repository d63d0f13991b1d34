// Generated by scripts/make_catalog.py. Do not edit.
#pragma once

namespace socle {

inline const char* builtin_catalog_text() {
  return
    "group C1\n"
    "table: 1 0\n"
    "group C2\n"
    "table: 2 0 1 1 0\n"
    "group C3\n"
    "table: 3 0 1 2 1 2 0 2 0 1\n"
    "group C2xC2\n"
    "table: 4 0 1 2 3 1 0 3 2 2 3 0 1 3 2 1 0\n"
    "group C4\n"
    "table: 4 0 1 2 3 1 2 3 0 2 3 0 1 3 0 1 2\n"
    "group C5\n"
    "table: 5 0 1 2 3 4 1 2 3 4 0 2 3 4 0 1 3 4 0 1 2 4 0 1 2 3\n"
    "group C6\n"
    "table: 6 0 1 2 3 4 5 1 2 3 4 5 0 2 3 4 5 0 1 3 4 5 0 1 2 4 5 0 1 2 3 5 0 1 2 3 4\n"
    "group S3\n"
    "table: 6 0 1 2 3 4 5 1 0 4 5 2 3 2 3 0 1 5 4 3 2 5 4 0 1 4 5 1 0 3 2 5 4 3 2 1 0\n"
    "group C7\n"
    "table: 7 0 1 2 3 4 5 6 1 2 3 4 5 6 0 2 3 4 5 6 0 1 3 4 5 6 0 1 2 4 5 6 0 1 2 3 5 6 0 1 2 3 4 6 0 1 2 3 4 5\n"
    "group C2xC2xC2\n"
    "table: 8 0 1 2 3 4 5 6 7 1 0 3 2 5 4 7 6 2 3 0 1 6 7 4 5 3 2 1 0 7 6 5 4 4 5 6 7 0 1 2 3 5 4 7 6 1 0 3 2 6 7 4 5 2 3 0 1 7 6 5 4 3 2 1 0\n"
    "group C4xC2\n"
    "table: 8 0 1 2 3 4 5 6 7 1 0 3 2 5 4 7 6 2 3 4 5 6 7 0 1 3 2 5 4 7 6 1 0 4 5 6 7 0 1 2 3 5 4 7 6 1 0 3 2 6 7 0 1 2 3 4 5 7 6 1 0 3 2 5 4\n"
    "group C8\n"
    "table: 8 0 1 2 3 4 5 6 7 1 2 3 4 5 6 7 0 2 3 4 5 6 7 0 1 3 4 5 6 7 0 1 2 4 5 6 7 0 1 2 3 5 6 7 0 1 2 3 4 6 7 0 1 2 3 4 5 7 0 1 2 3 4 5 6\n"
    "group D4\n"
    "table: 8 0 1 2 3 4 5 6 7 1 2 3 0 5 6 7 4 2 3 0 1 6 7 4 5 3 0 1 2 7 4 5 6 4 7 6 5 0 3 2 1 5 4 7 6 1 0 3 2 6 5 4 7 2 1 0 3 7 6 5 4 3 2 1 0\n"
    "group Q8\n"
    "table: 8 0 1 2 3 4 5 6 7 1 2 3 0 5 6 7 4 2 3 0 1 6 7 4 5 3 0 1 2 7 4 5 6 4 7 6 5 2 1 0 3 5 4 7 6 3 2 1 0 6 5 4 7 0 3 2 1 7 6 5 4 1 0 3 2\n"
    "group C3xC3\n"
    "table: 9 0 1 2 3 4 5 6 7 8 1 2 0 4 5 3 7 8 6 2 0 1 5 3 4 8 6 7 3 4 5 6 7 8 0 1 2 4 5 3 7 8 6 1 2 0 5 3 4 8 6 7 2 0 1 6 7 8 0 1 2 3 4 5 7 8 6 1 2 0 4 5 3 8 6 7 2 0 1 5 3 4\n"
    "group C9\n"
    "table: 9 0 1 2 3 4 5 6 7 8 1 2 3 4 5 6 7 8 0 2 3 4 5 6 7 8 0 1 3 4 5 6 7 8 0 1 2 4 5 6 7 8 0 1 2 3 5 6 7 8 0 1 2 3 4 6 7 8 0 1 2 3 4 5 7 8 0 1 2 3 4 5 6 8 0 1 2 3 4 5 6 7\n"
    "group C10\n"
    "table: 10 0 1 2 3 4 5 6 7 8 9 1 2 3 4 5 6 7 8 9 0 2 3 4 5 6 7 8 9 0 1 3 4 5 6 7 8 9 0 1 2 4 5 6 7 8 9 0 1 2 3 5 6 7 8 9 0 1 2 3 4 6 7 8 9 0 1 2 3 4 5 7 8 9 0 1 2 3 4 5 6 8 9 0 1 2 3 4 5 6 7 9 0 1 2 3 4 5 6 7 8\n"
    "group D5\n"
    "table: 10 0 1 2 3 4 5 6 7 8 9 1 2 3 4 0 6 7 8 9 5 2 3 4 0 1 7 8 9 5 6 3 4 0 1 2 8 9 5 6 7 4 0 1 2 3 9 5 6 7 8 5 9 8 7 6 0 4 3 2 1 6 5 9 8 7 1 0 4 3 2 7 6 5 9 8 2 1 0 4 3 8 7 6 5 9 3 2 1 0 4 9 8 7 6 5 4 3 2 1 0\n"
    "group C11\n"
    "table: 11 0 1 2 3 4 5 6 7 8 9 10 1 2 3 4 5 6 7 8 9 10 0 2 3 4 5 6 7 8 9 10 0 1 3 4 5 6 7 8 9 10 0 1 2 4 5 6 7 8 9 10 0 1 2 3 5 6 7 8 9 10 0 1 2 3 4 6 7 8 9 10 0 1 2 3 4 5 7 8 9 10 0 1 2 3 4 5 6 8 9 10 0 1 2 3 4 5 6 7 9 10 0 1 2 3 4 5 6 7 8 10 0 1 2 3 4 5 6 7 8 9\n"
    "group A4\n"
    "table: 12 0 1 2 3 4 5 6 7 8 9 10 11 1 2 0 6 8 7 9 11 10 3 4 5 2 0 1 9 10 11 3 5 4 6 8 7 3 5 4 0 2 1 10 9 11 7 6 8 4 3 5 7 6 8 0 1 2 10 11 9 5 4 3 10 11 9 7 8 6 0 2 1 6 7 8 1 0 2 4 3 5 11 9 10 7 8 6 4 5 3 11 10 9 1 0 2 8 6 7 11 9 10 1 2 0 4 5 3 9 11 10 2 1 0 8 6 7 5 3 4 10 9 11 5 3 4 2 0 1 8 7 6 11 10 9 8 7 6 5 4 3 2 1 0\n"
    "group C12\n"
    "table: 12 0 1 2 3 4 5 6 7 8 9 10 11 1 2 3 4 5 6 7 8 9 10 11 0 2 3 4 5 6 7 8 9 10 11 0 1 3 4 5 6 7 8 9 10 11 0 1 2 4 5 6 7 8 9 10 11 0 1 2 3 5 6 7 8 9 10 11 0 1 2 3 4 6 7 8 9 10 11 0 1 2 3 4 5 7 8 9 10 11 0 1 2 3 4 5 6 8 9 10 11 0 1 2 3 4 5 6 7 9 10 11 0 1 2 3 4 5 6 7 8 10 11 0 1 2 3 4 5 6 7 8 9 11 0 1 2 3 4 5 6 7 8 9 10\n"
    "group C6xC2\n"
    "table: 12 0 1 2 3 4 5 6 7 8 9 10 11 1 0 3 2 5 4 7 6 9 8 11 10 2 3 4 5 6 7 8 9 10 11 0 1 3 2 5 4 7 6 9 8 11 10 1 0 4 5 6 7 8 9 10 11 0 1 2 3 5 4 7 6 9 8 11 10 1 0 3 2 6 7 8 9 10 11 0 1 2 3 4 5 7 6 9 8 11 10 1 0 3 2 5 4 8 9 10 11 0 1 2 3 4 5 6 7 9 8 11 10 1 0 3 2 5 4 7 6 10 11 0 1 2 3 4 5 6 7 8 9 11 10 1 0 3 2 5 4 7 6 9 8\n"
    "group D6\n"
    "table: 12 0 1 2 3 4 5 6 7 8 9 10 11 1 2 3 4 5 0 7 8 9 10 11 6 2 3 4 5 0 1 8 9 10 11 6 7 3 4 5 0 1 2 9 10 11 6 7 8 4 5 0 1 2 3 10 11 6 7 8 9 5 0 1 2 3 4 11 6 7 8 9 10 6 11 10 9 8 7 0 5 4 3 2 1 7 6 11 10 9 8 1 0 5 4 3 2 8 7 6 11 10 9 2 1 0 5 4 3 9 8 7 6 11 10 3 2 1 0 5 4 10 9 8 7 6 11 4 3 2 1 0 5 11 10 9 8 7 6 5 4 3 2 1 0\n"
    "group Dic3\n"
    "table: 12 0 1 2 3 4 5 6 7 8 9 10 11 1 2 3 4 5 0 7 8 9 10 11 6 2 3 4 5 0 1 8 9 10 11 6 7 3 4 5 0 1 2 9 10 11 6 7 8 4 5 0 1 2 3 10 11 6 7 8 9 5 0 1 2 3 4 11 6 7 8 9 10 6 11 10 9 8 7 3 2 1 0 5 4 7 6 11 10 9 8 4 3 2 1 0 5 8 7 6 11 10 9 5 4 3 2 1 0 9 8 7 6 11 10 0 5 4 3 2 1 10 9 8 7 6 11 1 0 5 4 3 2 11 10 9 8 7 6 2 1 0 5 4 3\n"
    "group C13\n"
    "table: 13 0 1 2 3 4 5 6 7 8 9 10 11 12 1 2 3 4 5 6 7 8 9 10 11 12 0 2 3 4 5 6 7 8 9 10 11 12 0 1 3 4 5 6 7 8 9 10 11 12 0 1 2 4 5 6 7 8 9 10 11 12 0 1 2 3 5 6 7 8 9 10 11 12 0 1 2 3 4 6 7 8 9 10 11 12 0 1 2 3 4 5 7 8 9 10 11 12 0 1 2 3 4 5 6 8 9 10 11 12 0 1 2 3 4 5 6 7 9 10 11 12 0 1 2 3 4 5 6 7 8 10 11 12 0 1 2 3 4 5 6 7 8 9 11 12 0 1 2 3 4 5 6 7 8 9 10 12 0 1 2 3 4 5 6 7 8 9 10 11\n"
    "group C14\n"
    "table: 14 0 1 2 3 4 5 6 7 8 9 10 11 12 13 1 2 3 4 5 6 7 8 9 10 11 12 13 0 2 3 4 5 6 7 8 9 10 11 12 13 0 1 3 4 5 6 7 8 9 10 11 12 13 0 1 2 4 5 6 7 8 9 10 11 12 13 0 1 2 3 5 6 7 8 9 10 11 12 13 0 1 2 3 4 6 7 8 9 10 11 12 13 0 1 2 3 4 5 7 8 9 10 11 12 13 0 1 2 3 4 5 6 8 9 10 11 12 13 0 1 2 3 4 5 6 7 9 10 11 12 13 0 1 2 3 4 5 6 7 8 10 11 12 13 0 1 2 3 4 5 6 7 8 9 11 12 13 0 1 2 3 4 5 6 7 8 9 10 12 13 0 1 2 3 4 5 6 7 8 9 10 11 13 0 1 2 3 4 5 6 7 8 9 10 11 12\n"
    "group D7\n"
    "table: 14 0 1 2 3 4 5 6 7 8 9 10 11 12 13 1 2 3 4 5 6 0 8 9 10 11 12 13 7 2 3 4 5 6 0 1 9 10 11 12 13 7 8 3 4 5 6 0 1 2 10 11 12 13 7 8 9 4 5 6 0 1 2 3 11 12 13 7 8 9 10 5 6 0 1 2 3 4 12 13 7 8 9 10 11 6 0 1 2 3 4 5 13 7 8 9 10 11 12 7 13 12 11 10 9 8 0 6 5 4 3 2 1 8 7 13 12 11 10 9 1 0 6 5 4 3 2 9 8 7 13 12 11 10 2 1 0 6 5 4 3 10 9 8 7 13 12 11 3 2 1 0 6 5 4 11 10 9 8 7 13 12 4 3 2 1 0 6 5 12 11 10 9 8 7 13 5 4 3 2 1 0 6 13 12 11 10 9 8 7 6 5 4 3 2 1 0\n"
    "group C15\n"
    "table: 15 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 1 2 3 4 5 6 7 8 9 10 11 12 13 14 0 2 3 4 5 6 7 8 9 10 11 12 13 14 0 1 3 4 5 6 7 8 9 10 11 12 13 14 0 1 2 4 5 6 7 8 9 10 11 12 13 14 0 1 2 3 5 6 7 8 9 10 11 12 13 14 0 1 2 3 4 6 7 8 9 10 11 12 13 14 0 1 2 3 4 5 7 8 9 10 11 12 13 14 0 1 2 3 4 5 6 8 9 10 11 12 13 14 0 1 2 3 4 5 6 7 9 10 11 12 13 14 0 1 2 3 4 5 6 7 8 10 11 12 13 14 0 1 2 3 4 5 6 7 8 9 11 12 13 14 0 1 2 3 4 5 6 7 8 9 10 12 13 14 0 1 2 3 4 5 6 7 8 9 10 11 13 14 0 1 2 3 4 5 6 7 8 9 10 11 12 14 0 1 2 3 4 5 6 7 8 9 10 11 12 13\n"
    "group C16\n"
    "table: 16 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 0 2 3 4 5 6 7 8 9 10 11 12 13 14 15 0 1 3 4 5 6 7 8 9 10 11 12 13 14 15 0 1 2 4 5 6 7 8 9 10 11 12 13 14 15 0 1 2 3 5 6 7 8 9 10 11 12 13 14 15 0 1 2 3 4 6 7 8 9 10 11 12 13 14 15 0 1 2 3 4 5 7 8 9 10 11 12 13 14 15 0 1 2 3 4 5 6 8 9 10 11 12 13 14 15 0 1 2 3 4 5 6 7 9 10 11 12 13 14 15 0 1 2 3 4 5 6 7 8 10 11 12 13 14 15 0 1 2 3 4 5 6 7 8 9 11 12 13 14 15 0 1 2 3 4 5 6 7 8 9 10 12 13 14 15 0 1 2 3 4 5 6 7 8 9 10 11 13 14 15 0 1 2 3 4 5 6 7 8 9 10 11 12 14 15 0 1 2 3 4 5 6 7 8 9 10 11 12 13 15 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14\n"
    "group C2xC2xC2xC2\n"
    "table: 16 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 1 0 3 2 5 4 7 6 9 8 11 10 13 12 15 14 2 3 0 1 6 7 4 5 10 11 8 9 14 15 12 13 3 2 1 0 7 6 5 4 11 10 9 8 15 14 13 12 4 5 6 7 0 1 2 3 12 13 14 15 8 9 10 11 5 4 7 6 1 0 3 2 13 12 15 14 9 8 11 10 6 7 4 5 2 3 0 1 14 15 12 13 10 11 8 9 7 6 5 4 3 2 1 0 15 14 13 12 11 10 9 8 8 9 10 11 12 13 14 15 0 1 2 3 4 5 6 7 9 8 11 10 13 12 15 14 1 0 3 2 5 4 7 6 10 11 8 9 14 15 12 13 2 3 0 1 6 7 4 5 11 10 9 8 15 14 13 12 3 2 1 0 7 6 5 4 12 13 14 15 8 9 10 11 4 5 6 7 0 1 2 3 13 12 15 14 9 8 11 10 5 4 7 6 1 0 3 2 14 15 12 13 10 11 8 9 6 7 4 5 2 3 0 1 15 14 13 12 11 10 9 8 7 6 5 4 3 2 1 0\n"
    "group C4sC4\n"
    "table: 16 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 1 2 3 0 5 6 7 4 9 10 11 8 13 14 15 12 2 3 0 1 6 7 4 5 10 11 8 9 14 15 12 13 3 0 1 2 7 4 5 6 11 8 9 10 15 12 13 14 4 7 6 5 8 11 10 9 12 15 14 13 0 3 2 1 5 4 7 6 9 8 11 10 13 12 15 14 1 0 3 2 6 5 4 7 10 9 8 11 14 13 12 15 2 1 0 3 7 6 5 4 11 10 9 8 15 14 13 12 3 2 1 0 8 9 10 11 12 13 14 15 0 1 2 3 4 5 6 7 9 10 11 8 13 14 15 12 1 2 3 0 5 6 7 4 10 11 8 9 14 15 12 13 2 3 0 1 6 7 4 5 11 8 9 10 15 12 13 14 3 0 1 2 7 4 5 6 12 15 14 13 0 3 2 1 4 7 6 5 8 11 10 9 13 12 15 14 1 0 3 2 5 4 7 6 9 8 11 10 14 13 12 15 2 1 0 3 6 5 4 7 10 9 8 11 15 14 13 12 3 2 1 0 7 6 5 4 11 10 9 8\n"
    "group C4xC2sC2\n"
    "table: 16 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 1 0 3 2 5 4 7 6 9 8 11 10 13 12 15 14 2 3 4 5 6 7 0 1 10 11 12 13 14 15 8 9 3 2 5 4 7 6 1 0 11 10 13 12 15 14 9 8 4 5 6 7 0 1 2 3 12 13 14 15 8 9 10 11 5 4 7 6 1 0 3 2 13 12 15 14 9 8 11 10 6 7 0 1 2 3 4 5 14 15 8 9 10 11 12 13 7 6 1 0 3 2 5 4 15 14 9 8 11 10 13 12 8 9 11 10 12 13 15 14 0 1 3 2 4 5 7 6 9 8 10 11 13 12 14 15 1 0 2 3 5 4 6 7 10 11 13 12 14 15 9 8 2 3 5 4 6 7 1 0 11 10 12 13 15 14 8 9 3 2 4 5 7 6 0 1 12 13 15 14 8 9 11 10 4 5 7 6 0 1 3 2 13 12 14 15 9 8 10 11 5 4 6 7 1 0 2 3 14 15 9 8 10 11 13 12 6 7 1 0 2 3 5 4 15 14 8 9 11 10 12 13 7 6 0 1 3 2 4 5\n"
    "group C4xC2xC2\n"
    "table: 16 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 1 0 3 2 5 4 7 6 9 8 11 10 13 12 15 14 2 3 0 1 6 7 4 5 10 11 8 9 14 15 12 13 3 2 1 0 7 6 5 4 11 10 9 8 15 14 13 12 4 5 6 7 8 9 10 11 12 13 14 15 0 1 2 3 5 4 7 6 9 8 11 10 13 12 15 14 1 0 3 2 6 7 4 5 10 11 8 9 14 15 12 13 2 3 0 1 7 6 5 4 11 10 9 8 15 14 13 12 3 2 1 0 8 9 10 11 12 13 14 15 0 1 2 3 4 5 6 7 9 8 11 10 13 12 15 14 1 0 3 2 5 4 7 6 10 11 8 9 14 15 12 13 2 3 0 1 6 7 4 5 11 10 9 8 15 14 13 12 3 2 1 0 7 6 5 4 12 13 14 15 0 1 2 3 4 5 6 7 8 9 10 11 13 12 15 14 1 0 3 2 5 4 7 6 9 8 11 10 14 15 12 13 2 3 0 1 6 7 4 5 10 11 8 9 15 14 13 12 3 2 1 0 7 6 5 4 11 10 9 8\n"
    "group C4xC4\n"
    "table: 16 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 1 2 3 0 5 6 7 4 9 10 11 8 13 14 15 12 2 3 0 1 6 7 4 5 10 11 8 9 14 15 12 13 3 0 1 2 7 4 5 6 11 8 9 10 15 12 13 14 4 5 6 7 8 9 10 11 12 13 14 15 0 1 2 3 5 6 7 4 9 10 11 8 13 14 15 12 1 2 3 0 6 7 4 5 10 11 8 9 14 15 12 13 2 3 0 1 7 4 5 6 11 8 9 10 15 12 13 14 3 0 1 2 8 9 10 11 12 13 14 15 0 1 2 3 4 5 6 7 9 10 11 8 13 14 15 12 1 2 3 0 5 6 7 4 10 11 8 9 14 15 12 13 2 3 0 1 6 7 4 5 11 8 9 10 15 12 13 14 3 0 1 2 7 4 5 6 12 13 14 15 0 1 2 3 4 5 6 7 8 9 10 11 13 14 15 12 1 2 3 0 5 6 7 4 9 10 11 8 14 15 12 13 2 3 0 1 6 7 4 5 10 11 8 9 15 12 13 14 3 0 1 2 7 4 5 6 11 8 9 10\n"
    "group C8xC2\n"
    "table: 16 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 1 0 3 2 5 4 7 6 9 8 11 10 13 12 15 14 2 3 4 5 6 7 8 9 10 11 12 13 14 15 0 1 3 2 5 4 7 6 9 8 11 10 13 12 15 14 1 0 4 5 6 7 8 9 10 11 12 13 14 15 0 1 2 3 5 4 7 6 9 8 11 10 13 12 15 14 1 0 3 2 6 7 8 9 10 11 12 13 14 15 0 1 2 3 4 5 7 6 9 8 11 10 13 12 15 14 1 0 3 2 5 4 8 9 10 11 12 13 14 15 0 1 2 3 4 5 6 7 9 8 11 10 13 12 15 14 1 0 3 2 5 4 7 6 10 11 12 13 14 15 0 1 2 3 4 5 6 7 8 9 11 10 13 12 15 14 1 0 3 2 5 4 7 6 9 8 12 13 14 15 0 1 2 3 4 5 6 7 8 9 10 11 13 12 15 14 1 0 3 2 5 4 7 6 9 8 11 10 14 15 0 1 2 3 4 5 6 7 8 9 10 11 12 13 15 14 1 0 3 2 5 4 7 6 9 8 11 10 13 12\n"
    "group D4xC2\n"
    "table: 16 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 1 0 3 2 5 4 7 6 9 8 11 10 13 12 15 14 2 3 4 5 6 7 0 1 10 11 12 13 14 15 8 9 3 2 5 4 7 6 1 0 11 10 13 12 15 14 9 8 4 5 6 7 0 1 2 3 12 13 14 15 8 9 10 11 5 4 7 6 1 0 3 2 13 12 15 14 9 8 11 10 6 7 0 1 2 3 4 5 14 15 8 9 10 11 12 13 7 6 1 0 3 2 5 4 15 14 9 8 11 10 13 12 8 9 14 15 12 13 10 11 0 1 6 7 4 5 2 3 9 8 15 14 13 12 11 10 1 0 7 6 5 4 3 2 10 11 8 9 14 15 12 13 2 3 0 1 6 7 4 5 11 10 9 8 15 14 13 12 3 2 1 0 7 6 5 4 12 13 10 11 8 9 14 15 4 5 2 3 0 1 6 7 13 12 11 10 9 8 15 14 5 4 3 2 1 0 7 6 14 15 12 13 10 11 8 9 6 7 4 5 2 3 0 1 15 14 13 12 11 10 9 8 7 6 5 4 3 2 1 0\n"
    "group D8\n"
    "table: 16 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 1 2 3 4 5 6 7 0 9 10 11 12 13 14 15 8 2 3 4 5 6 7 0 1 10 11 12 13 14 15 8 9 3 4 5 6 7 0 1 2 11 12 13 14 15 8 9 10 4 5 6 7 0 1 2 3 12 13 14 15 8 9 10 11 5 6 7 0 1 2 3 4 13 14 15 8 9 10 11 12 6 7 0 1 2 3 4 5 14 15 8 9 10 11 12 13 7 0 1 2 3 4 5 6 15 8 9 10 11 12 13 14 8 15 14 13 12 11 10 9 0 7 6 5 4 3 2 1 9 8 15 14 13 12 11 10 1 0 7 6 5 4 3 2 10 9 8 15 14 13 12 11 2 1 0 7 6 5 4 3 11 10 9 8 15 14 13 12 3 2 1 0 7 6 5 4 12 11 10 9 8 15 14 13 4 3 2 1 0 7 6 5 13 12 11 10 9 8 15 14 5 4 3 2 1 0 7 6 14 13 12 11 10 9 8 15 6 5 4 3 2 1 0 7 15 14 13 12 11 10 9 8 7 6 5 4 3 2 1 0\n"
    "group M16\n"
    "table: 16 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 1 2 3 4 5 6 7 0 9 10 11 12 13 14 15 8 2 3 4 5 6 7 0 1 10 11 12 13 14 15 8 9 3 4 5 6 7 0 1 2 11 12 13 14 15 8 9 10 4 5 6 7 0 1 2 3 12 13 14 15 8 9 10 11 5 6 7 0 1 2 3 4 13 14 15 8 9 10 11 12 6 7 0 1 2 3 4 5 14 15 8 9 10 11 12 13 7 0 1 2 3 4 5 6 15 8 9 10 11 12 13 14 8 13 10 15 12 9 14 11 0 5 2 7 4 1 6 3 9 14 11 8 13 10 15 12 1 6 3 0 5 2 7 4 10 15 12 9 14 11 8 13 2 7 4 1 6 3 0 5 11 8 13 10 15 12 9 14 3 0 5 2 7 4 1 6 12 9 14 11 8 13 10 15 4 1 6 3 0 5 2 7 13 10 15 12 9 14 11 8 5 2 7 4 1 6 3 0 14 11 8 13 10 15 12 9 6 3 0 5 2 7 4 1 15 12 9 14 11 8 13 10 7 4 1 6 3 0 5 2\n"
    "group Pauli16\n"
    "table: 16 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 1 2 3 0 5 6 7 4 9 10 11 8 13 14 15 12 2 3 0 1 6 7 4 5 10 11 8 9 14 15 12 13 3 0 1 2 7 4 5 6 11 8 9 10 15 12 13 14 4 5 6 7 2 3 0 1 12 13 14 15 10 11 8 9 5 6 7 4 3 0 1 2 13 14 15 12 11 8 9 10 6 7 4 5 0 1 2 3 14 15 12 13 8 9 10 11 7 4 5 6 1 2 3 0 15 12 13 14 9 10 11 8 8 9 10 11 14 15 12 13 0 1 2 3 6 7 4 5 9 10 11 8 15 12 13 14 1 2 3 0 7 4 5 6 10 11 8 9 12 13 14 15 2 3 0 1 4 5 6 7 11 8 9 10 13 14 15 12 3 0 1 2 5 6 7 4 12 13 14 15 8 9 10 11 4 5 6 7 0 1 2 3 13 14 15 12 9 10 11 8 5 6 7 4 1 2 3 0 14 15 12 13 10 11 8 9 6 7 4 5 2 3 0 1 15 12 13 14 11 8 9 10 7 4 5 6 3 0 1 2\n"
    "group Q16\n"
    "table: 16 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 1 2 3 4 5 6 7 0 9 10 11 12 13 14 15 8 2 3 4 5 6 7 0 1 10 11 12 13 14 15 8 9 3 4 5 6 7 0 1 2 11 12 13 14 15 8 9 10 4 5 6 7 0 1 2 3 12 13 14 15 8 9 10 11 5 6 7 0 1 2 3 4 13 14 15 8 9 10 11 12 6 7 0 1 2 3 4 5 14 15 8 9 10 11 12 13 7 0 1 2 3 4 5 6 15 8 9 10 11 12 13 14 8 15 14 13 12 11 10 9 4 3 2 1 0 7 6 5 9 8 15 14 13 12 11 10 5 4 3 2 1 0 7 6 10 9 8 15 14 13 12 11 6 5 4 3 2 1 0 7 11 10 9 8 15 14 13 12 7 6 5 4 3 2 1 0 12 11 10 9 8 15 14 13 0 7 6 5 4 3 2 1 13 12 11 10 9 8 15 14 1 0 7 6 5 4 3 2 14 13 12 11 10 9 8 15 2 1 0 7 6 5 4 3 15 14 13 12 11 10 9 8 3 2 1 0 7 6 5 4\n"
    "group Q8xC2\n"
    "table: 16 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 1 0 3 2 5 4 7 6 9 8 11 10 13 12 15 14 2 3 4 5 6 7 0 1 10 11 12 13 14 15 8 9 3 2 5 4 7 6 1 0 11 10 13 12 15 14 9 8 4 5 6 7 0 1 2 3 12 13 14 15 8 9 10 11 5 4 7 6 1 0 3 2 13 12 15 14 9 8 11 10 6 7 0 1 2 3 4 5 14 15 8 9 10 11 12 13 7 6 1 0 3 2 5 4 15 14 9 8 11 10 13 12 8 9 14 15 12 13 10 11 4 5 2 3 0 1 6 7 9 8 15 14 13 12 11 10 5 4 3 2 1 0 7 6 10 11 8 9 14 15 12 13 6 7 4 5 2 3 0 1 11 10 9 8 15 14 13 12 7 6 5 4 3 2 1 0 12 13 10 11 8 9 14 15 0 1 6 7 4 5 2 3 13 12 11 10 9 8 15 14 1 0 7 6 5 4 3 2 14 15 12 13 10 11 8 9 2 3 0 1 6 7 4 5 15 14 13 12 11 10 9 8 3 2 1 0 7 6 5 4\n"
    "group SD16\n"
    "table: 16 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 1 2 3 4 5 6 7 0 9 10 11 12 13 14 15 8 2 3 4 5 6 7 0 1 10 11 12 13 14 15 8 9 3 4 5 6 7 0 1 2 11 12 13 14 15 8 9 10 4 5 6 7 0 1 2 3 12 13 14 15 8 9 10 11 5 6 7 0 1 2 3 4 13 14 15 8 9 10 11 12 6 7 0 1 2 3 4 5 14 15 8 9 10 11 12 13 7 0 1 2 3 4 5 6 15 8 9 10 11 12 13 14 8 11 14 9 12 15 10 13 0 3 6 1 4 7 2 5 9 12 15 10 13 8 11 14 1 4 7 2 5 0 3 6 10 13 8 11 14 9 12 15 2 5 0 3 6 1 4 7 11 14 9 12 15 10 13 8 3 6 1 4 7 2 5 0 12 15 10 13 8 11 14 9 4 7 2 5 0 3 6 1 13 8 11 14 9 12 15 10 5 0 3 6 1 4 7 2 14 9 12 15 10 13 8 11 6 1 4 7 2 5 0 3 15 10 13 8 11 14 9 12 7 2 5 0 3 6 1 4\n"
    "group C17\n"
    "table: 17 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 0 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 0 1 3 4 5 6 7 8 9 10 11 12 13 14 15 16 0 1 2 4 5 6 7 8 9 10 11 12 13 14 15 16 0 1 2 3 5 6 7 8 9 10 11 12 13 14 15 16 0 1 2 3 4 6 7 8 9 10 11 12 13 14 15 16 0 1 2 3 4 5 7 8 9 10 11 12 13 14 15 16 0 1 2 3 4 5 6 8 9 10 11 12 13 14 15 16 0 1 2 3 4 5 6 7 9 10 11 12 13 14 15 16 0 1 2 3 4 5 6 7 8 10 11 12 13 14 15 16 0 1 2 3 4 5 6 7 8 9 11 12 13 14 15 16 0 1 2 3 4 5 6 7 8 9 10 12 13 14 15 16 0 1 2 3 4 5 6 7 8 9 10 11 13 14 15 16 0 1 2 3 4 5 6 7 8 9 10 11 12 14 15 16 0 1 2 3 4 5 6 7 8 9 10 11 12 13 15 16 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 16 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15\n"
    "group C18\n"
    "table: 18 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 0 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 0 1 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 0 1 2 4 5 6 7 8 9 10 11 12 13 14 15 16 17 0 1 2 3 5 6 7 8 9 10 11 12 13 14 15 16 17 0 1 2 3 4 6 7 8 9 10 11 12 13 14 15 16 17 0 1 2 3 4 5 7 8 9 10 11 12 13 14 15 16 17 0 1 2 3 4 5 6 8 9 10 11 12 13 14 15 16 17 0 1 2 3 4 5 6 7 9 10 11 12 13 14 15 16 17 0 1 2 3 4 5 6 7 8 10 11 12 13 14 15 16 17 0 1 2 3 4 5 6 7 8 9 11 12 13 14 15 16 17 0 1 2 3 4 5 6 7 8 9 10 12 13 14 15 16 17 0 1 2 3 4 5 6 7 8 9 10 11 13 14 15 16 17 0 1 2 3 4 5 6 7 8 9 10 11 12 14 15 16 17 0 1 2 3 4 5 6 7 8 9 10 11 12 13 15 16 17 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 16 17 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 17 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16\n"
    "group C3xC6\n"
    "table: 18 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 1 2 3 4 5 0 7 8 9 10 11 6 13 14 15 16 17 12 2 3 4 5 0 1 8 9 10 11 6 7 14 15 16 17 12 13 3 4 5 0 1 2 9 10 11 6 7 8 15 16 17 12 13 14 4 5 0 1 2 3 10 11 6 7 8 9 16 17 12 13 14 15 5 0 1 2 3 4 11 6 7 8 9 10 17 12 13 14 15 16 6 7 8 9 10 11 12 13 14 15 16 17 0 1 2 3 4 5 7 8 9 10 11 6 13 14 15 16 17 12 1 2 3 4 5 0 8 9 10 11 6 7 14 15 16 17 12 13 2 3 4 5 0 1 9 10 11 6 7 8 15 16 17 12 13 14 3 4 5 0 1 2 10 11 6 7 8 9 16 17 12 13 14 15 4 5 0 1 2 3 11 6 7 8 9 10 17 12 13 14 15 16 5 0 1 2 3 4 12 13 14 15 16 17 0 1 2 3 4 5 6 7 8 9 10 11 13 14 15 16 17 12 1 2 3 4 5 0 7 8 9 10 11 6 14 15 16 17 12 13 2 3 4 5 0 1 8 9 10 11 6 7 15 16 17 12 13 14 3 4 5 0 1 2 9 10 11 6 7 8 16 17 12 13 14 15 4 5 0 1 2 3 10 11 6 7 8 9 17 12 13 14 15 16 5 0 1 2 3 4 11 6 7 8 9 10\n"
    "group D9\n"
    "table: 18 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 1 2 3 4 5 6 7 8 0 10 11 12 13 14 15 16 17 9 2 3 4 5 6 7 8 0 1 11 12 13 14 15 16 17 9 10 3 4 5 6 7 8 0 1 2 12 13 14 15 16 17 9 10 11 4 5 6 7 8 0 1 2 3 13 14 15 16 17 9 10 11 12 5 6 7 8 0 1 2 3 4 14 15 16 17 9 10 11 12 13 6 7 8 0 1 2 3 4 5 15 16 17 9 10 11 12 13 14 7 8 0 1 2 3 4 5 6 16 17 9 10 11 12 13 14 15 8 0 1 2 3 4 5 6 7 17 9 10 11 12 13 14 15 16 9 17 16 15 14 13 12 11 10 0 8 7 6 5 4 3 2 1 10 9 17 16 15 14 13 12 11 1 0 8 7 6 5 4 3 2 11 10 9 17 16 15 14 13 12 2 1 0 8 7 6 5 4 3 12 11 10 9 17 16 15 14 13 3 2 1 0 8 7 6 5 4 13 12 11 10 9 17 16 15 14 4 3 2 1 0 8 7 6 5 14 13 12 11 10 9 17 16 15 5 4 3 2 1 0 8 7 6 15 14 13 12 11 10 9 17 16 6 5 4 3 2 1 0 8 7 16 15 14 13 12 11 10 9 17 7 6 5 4 3 2 1 0 8 17 16 15 14 13 12 11 10 9 8 7 6 5 4 3 2 1 0\n"
    "group GD9\n"
    "table: 18 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 1 2 0 4 5 3 7 8 6 10 11 9 13 14 12 16 17 15 2 0 1 5 3 4 8 6 7 11 9 10 14 12 13 17 15 16 3 4 5 6 7 8 0 1 2 12 13 14 15 16 17 9 10 11 4 5 3 7 8 6 1 2 0 13 14 12 16 17 15 10 11 9 5 3 4 8 6 7 2 0 1 14 12 13 17 15 16 11 9 10 6 7 8 0 1 2 3 4 5 15 16 17 9 10 11 12 13 14 7 8 6 1 2 0 4 5 3 16 17 15 10 11 9 13 14 12 8 6 7 2 0 1 5 3 4 17 15 16 11 9 10 14 12 13 9 11 10 15 17 16 12 14 13 0 2 1 6 8 7 3 5 4 10 9 11 16 15 17 13 12 14 1 0 2 7 6 8 4 3 5 11 10 9 17 16 15 14 13 12 2 1 0 8 7 6 5 4 3 12 14 13 9 11 10 15 17 16 3 5 4 0 2 1 6 8 7 13 12 14 10 9 11 16 15 17 4 3 5 1 0 2 7 6 8 14 13 12 11 10 9 17 16 15 5 4 3 2 1 0 8 7 6 15 17 16 12 14 13 9 11 10 6 8 7 3 5 4 0 2 1 16 15 17 13 12 14 10 9 11 7 6 8 4 3 5 1 0 2 17 16 15 14 13 12 11 10 9 8 7 6 5 4 3 2 1 0\n"
    "group S3xC3\n"
    "table: 18 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 1 2 0 4 5 3 7 8 6 10 11 9 13 14 12 16 17 15 2 0 1 5 3 4 8 6 7 11 9 10 14 12 13 17 15 16 3 4 5 0 1 2 12 13 14 15 16 17 6 7 8 9 10 11 4 5 3 1 2 0 13 14 12 16 17 15 7 8 6 10 11 9 5 3 4 2 0 1 14 12 13 17 15 16 8 6 7 11 9 10 6 7 8 9 10 11 0 1 2 3 4 5 15 16 17 12 13 14 7 8 6 10 11 9 1 2 0 4 5 3 16 17 15 13 14 12 8 6 7 11 9 10 2 0 1 5 3 4 17 15 16 14 12 13 9 10 11 6 7 8 15 16 17 12 13 14 0 1 2 3 4 5 10 11 9 7 8 6 16 17 15 13 14 12 1 2 0 4 5 3 11 9 10 8 6 7 17 15 16 14 12 13 2 0 1 5 3 4 12 13 14 15 16 17 3 4 5 0 1 2 9 10 11 6 7 8 13 14 12 16 17 15 4 5 3 1 2 0 10 11 9 7 8 6 14 12 13 17 15 16 5 3 4 2 0 1 11 9 10 8 6 7 15 16 17 12 13 14 9 10 11 6 7 8 3 4 5 0 1 2 16 17 15 13 14 12 10 11 9 7 8 6 4 5 3 1 2 0 17 15 16 14 12 13 11 9 10 8 6 7 5 3 4 2 0 1\n"
    "group C19\n"
    "table: 19 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 0 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 0 1 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 0 1 2 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 0 1 2 3 5 6 7 8 9 10 11 12 13 14 15 16 17 18 0 1 2 3 4 6 7 8 9 10 11 12 13 14 15 16 17 18 0 1 2 3 4 5 7 8 9 10 11 12 13 14 15 16 17 18 0 1 2 3 4 5 6 8 9 10 11 12 13 14 15 16 17 18 0 1 2 3 4 5 6 7 9 10 11 12 13 14 15 16 17 18 0 1 2 3 4 5 6 7 8 10 11 12 13 14 15 16 17 18 0 1 2 3 4 5 6 7 8 9 11 12 13 14 15 16 17 18 0 1 2 3 4 5 6 7 8 9 10 12 13 14 15 16 17 18 0 1 2 3 4 5 6 7 8 9 10 11 13 14 15 16 17 18 0 1 2 3 4 5 6 7 8 9 10 11 12 14 15 16 17 18 0 1 2 3 4 5 6 7 8 9 10 11 12 13 15 16 17 18 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 16 17 18 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 17 18 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 18 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17\n"
    "group C10xC2\n"
    "table: 20 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 1 0 3 2 5 4 7 6 9 8 11 10 13 12 15 14 17 16 19 18 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 0 1 3 2 5 4 7 6 9 8 11 10 13 12 15 14 17 16 19 18 1 0 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 0 1 2 3 5 4 7 6 9 8 11 10 13 12 15 14 17 16 19 18 1 0 3 2 6 7 8 9 10 11 12 13 14 15 16 17 18 19 0 1 2 3 4 5 7 6 9 8 11 10 13 12 15 14 17 16 19 18 1 0 3 2 5 4 8 9 10 11 12 13 14 15 16 17 18 19 0 1 2 3 4 5 6 7 9 8 11 10 13 12 15 14 17 16 19 18 1 0 3 2 5 4 7 6 10 11 12 13 14 15 16 17 18 19 0 1 2 3 4 5 6 7 8 9 11 10 13 12 15 14 17 16 19 18 1 0 3 2 5 4 7 6 9 8 12 13 14 15 16 17 18 19 0 1 2 3 4 5 6 7 8 9 10 11 13 12 15 14 17 16 19 18 1 0 3 2 5 4 7 6 9 8 11 10 14 15 16 17 18 19 0 1 2 3 4 5 6 7 8 9 10 11 12 13 15 14 17 16 19 18 1 0 3 2 5 4 7 6 9 8 11 10 13 12 16 17 18 19 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 17 16 19 18 1 0 3 2 5 4 7 6 9 8 11 10 13 12 15 14 18 19 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 19 18 1 0 3 2 5 4 7 6 9 8 11 10 13 12 15 14 17 16\n"
    "group C20\n"
    "table: 20 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 0 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 0 1 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 0 1 2 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 0 1 2 3 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 0 1 2 3 4 6 7 8 9 10 11 12 13 14 15 16 17 18 19 0 1 2 3 4 5 7 8 9 10 11 12 13 14 15 16 17 18 19 0 1 2 3 4 5 6 8 9 10 11 12 13 14 15 16 17 18 19 0 1 2 3 4 5 6 7 9 10 11 12 13 14 15 16 17 18 19 0 1 2 3 4 5 6 7 8 10 11 12 13 14 15 16 17 18 19 0 1 2 3 4 5 6 7 8 9 11 12 13 14 15 16 17 18 19 0 1 2 3 4 5 6 7 8 9 10 12 13 14 15 16 17 18 19 0 1 2 3 4 5 6 7 8 9 10 11 13 14 15 16 17 18 19 0 1 2 3 4 5 6 7 8 9 10 11 12 14 15 16 17 18 19 0 1 2 3 4 5 6 7 8 9 10 11 12 13 15 16 17 18 19 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 16 17 18 19 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 17 18 19 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 18 19 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 19 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18\n"
    "group D10\n"
    "table: 20 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 1 2 3 4 5 6 7 8 9 0 11 12 13 14 15 16 17 18 19 10 2 3 4 5 6 7 8 9 0 1 12 13 14 15 16 17 18 19 10 11 3 4 5 6 7 8 9 0 1 2 13 14 15 16 17 18 19 10 11 12 4 5 6 7 8 9 0 1 2 3 14 15 16 17 18 19 10 11 12 13 5 6 7 8 9 0 1 2 3 4 15 16 17 18 19 10 11 12 13 14 6 7 8 9 0 1 2 3 4 5 16 17 18 19 10 11 12 13 14 15 7 8 9 0 1 2 3 4 5 6 17 18 19 10 11 12 13 14 15 16 8 9 0 1 2 3 4 5 6 7 18 19 10 11 12 13 14 15 16 17 9 0 1 2 3 4 5 6 7 8 19 10 11 12 13 14 15 16 17 18 10 19 18 17 16 15 14 13 12 11 0 9 8 7 6 5 4 3 2 1 11 10 19 18 17 16 15 14 13 12 1 0 9 8 7 6 5 4 3 2 12 11 10 19 18 17 16 15 14 13 2 1 0 9 8 7 6 5 4 3 13 12 11 10 19 18 17 16 15 14 3 2 1 0 9 8 7 6 5 4 14 13 12 11 10 19 18 17 16 15 4 3 2 1 0 9 8 7 6 5 15 14 13 12 11 10 19 18 17 16 5 4 3 2 1 0 9 8 7 6 16 15 14 13 12 11 10 19 18 17 6 5 4 3 2 1 0 9 8 7 17 16 15 14 13 12 11 10 19 18 7 6 5 4 3 2 1 0 9 8 18 17 16 15 14 13 12 11 10 19 8 7 6 5 4 3 2 1 0 9 19 18 17 16 15 14 13 12 11 10 9 8 7 6 5 4 3 2 1 0\n"
    "group Dic5\n"
    "table: 20 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 1 2 3 4 5 6 7 8 9 0 11 12 13 14 15 16 17 18 19 10 2 3 4 5 6 7 8 9 0 1 12 13 14 15 16 17 18 19 10 11 3 4 5 6 7 8 9 0 1 2 13 14 15 16 17 18 19 10 11 12 4 5 6 7 8 9 0 1 2 3 14 15 16 17 18 19 10 11 12 13 5 6 7 8 9 0 1 2 3 4 15 16 17 18 19 10 11 12 13 14 6 7 8 9 0 1 2 3 4 5 16 17 18 19 10 11 12 13 14 15 7 8 9 0 1 2 3 4 5 6 17 18 19 10 11 12 13 14 15 16 8 9 0 1 2 3 4 5 6 7 18 19 10 11 12 13 14 15 16 17 9 0 1 2 3 4 5 6 7 8 19 10 11 12 13 14 15 16 17 18 10 19 18 17 16 15 14 13 12 11 5 4 3 2 1 0 9 8 7 6 11 10 19 18 17 16 15 14 13 12 6 5 4 3 2 1 0 9 8 7 12 11 10 19 18 17 16 15 14 13 7 6 5 4 3 2 1 0 9 8 13 12 11 10 19 18 17 16 15 14 8 7 6 5 4 3 2 1 0 9 14 13 12 11 10 19 18 17 16 15 9 8 7 6 5 4 3 2 1 0 15 14 13 12 11 10 19 18 17 16 0 9 8 7 6 5 4 3 2 1 16 15 14 13 12 11 10 19 18 17 1 0 9 8 7 6 5 4 3 2 17 16 15 14 13 12 11 10 19 18 2 1 0 9 8 7 6 5 4 3 18 17 16 15 14 13 12 11 10 19 3 2 1 0 9 8 7 6 5 4 19 18 17 16 15 14 13 12 11 10 4 3 2 1 0 9 8 7 6 5\n"
    "group F20\n"
    "table: 20 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 1 2 3 4 0 6 7 8 9 5 11 12 13 14 10 16 17 18 19 15 2 3 4 0 1 7 8 9 5 6 12 13 14 10 11 17 18 19 15 16 3 4 0 1 2 8 9 5 6 7 13 14 10 11 12 18 19 15 16 17 4 0 1 2 3 9 5 6 7 8 14 10 11 12 13 19 15 16 17 18 5 7 9 6 8 10 12 14 11 13 15 17 19 16 18 0 2 4 1 3 6 8 5 7 9 11 13 10 12 14 16 18 15 17 19 1 3 0 2 4 7 9 6 8 5 12 14 11 13 10 17 19 16 18 15 2 4 1 3 0 8 5 7 9 6 13 10 12 14 11 18 15 17 19 16 3 0 2 4 1 9 6 8 5 7 14 11 13 10 12 19 16 18 15 17 4 1 3 0 2 10 14 13 12 11 15 19 18 17 16 0 4 3 2 1 5 9 8 7 6 11 10 14 13 12 16 15 19 18 17 1 0 4 3 2 6 5 9 8 7 12 11 10 14 13 17 16 15 19 18 2 1 0 4 3 7 6 5 9 8 13 12 11 10 14 18 17 16 15 19 3 2 1 0 4 8 7 6 5 9 14 13 12 11 10 19 18 17 16 15 4 3 2 1 0 9 8 7 6 5 15 18 16 19 17 0 3 1 4 2 5 8 6 9 7 10 13 11 14 12 16 19 17 15 18 1 4 2 0 3 6 9 7 5 8 11 14 12 10 13 17 15 18 16 19 2 0 3 1 4 7 5 8 6 9 12 10 13 11 14 18 16 19 17 15 3 1 4 2 0 8 6 9 7 5 13 11 14 12 10 19 17 15 18 16 4 2 0 3 1 9 7 5 8 6 14 12 10 13 11\n"
    "group C21\n"
    "table: 21 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 0 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 0 1 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 0 1 2 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 0 1 2 3 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 0 1 2 3 4 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 0 1 2 3 4 5 7 8 9 10 11 12 13 14 15 16 17 18 19 20 0 1 2 3 4 5 6 8 9 10 11 12 13 14 15 16 17 18 19 20 0 1 2 3 4 5 6 7 9 10 11 12 13 14 15 16 17 18 19 20 0 1 2 3 4 5 6 7 8 10 11 12 13 14 15 16 17 18 19 20 0 1 2 3 4 5 6 7 8 9 11 12 13 14 15 16 17 18 19 20 0 1 2 3 4 5 6 7 8 9 10 12 13 14 15 16 17 18 19 20 0 1 2 3 4 5 6 7 8 9 10 11 13 14 15 16 17 18 19 20 0 1 2 3 4 5 6 7 8 9 10 11 12 14 15 16 17 18 19 20 0 1 2 3 4 5 6 7 8 9 10 11 12 13 15 16 17 18 19 20 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 16 17 18 19 20 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 17 18 19 20 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 18 19 20 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 19 20 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 20 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19\n"
    "group C7sC3\n"
    "table: 21 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 1 2 3 4 5 6 0 8 9 10 11 12 13 7 15 16 17 18 19 20 14 2 3 4 5 6 0 1 9 10 11 12 13 7 8 16 17 18 19 20 14 15 3 4 5 6 0 1 2 10 11 12 13 7 8 9 17 18 19 20 14 15 16 4 5 6 0 1 2 3 11 12 13 7 8 9 10 18 19 20 14 15 16 17 5 6 0 1 2 3 4 12 13 7 8 9 10 11 19 20 14 15 16 17 18 6 0 1 2 3 4 5 13 7 8 9 10 11 12 20 14 15 16 17 18 19 7 9 11 13 8 10 12 14 16 18 20 15 17 19 0 2 4 6 1 3 5 8 10 12 7 9 11 13 15 17 19 14 16 18 20 1 3 5 0 2 4 6 9 11 13 8 10 12 7 16 18 20 15 17 19 14 2 4 6 1 3 5 0 10 12 7 9 11 13 8 17 19 14 16 18 20 15 3 5 0 2 4 6 1 11 13 8 10 12 7 9 18 20 15 17 19 14 16 4 6 1 3 5 0 2 12 7 9 11 13 8 10 19 14 16 18 20 15 17 5 0 2 4 6 1 3 13 8 10 12 7 9 11 20 15 17 19 14 16 18 6 1 3 5 0 2 4 14 18 15 19 16 20 17 0 4 1 5 2 6 3 7 11 8 12 9 13 10 15 19 16 20 17 14 18 1 5 2 6 3 0 4 8 12 9 13 10 7 11 16 20 17 14 18 15 19 2 6 3 0 4 1 5 9 13 10 7 11 8 12 17 14 18 15 19 16 20 3 0 4 1 5 2 6 10 7 11 8 12 9 13 18 15 19 16 20 17 14 4 1 5 2 6 3 0 11 8 12 9 13 10 7 19 16 20 17 14 18 15 5 2 6 3 0 4 1 12 9 13 10 7 11 8 20 17 14 18 15 19 16 6 3 0 4 1 5 2 13 10 7 11 8 12 9\n"
    "group C22\n"
    "table: 22 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 0 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 0 1 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 0 1 2 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 0 1 2 3 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 0 1 2 3 4 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 0 1 2 3 4 5 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 0 1 2 3 4 5 6 8 9 10 11 12 13 14 15 16 17 18 19 20 21 0 1 2 3 4 5 6 7 9 10 11 12 13 14 15 16 17 18 19 20 21 0 1 2 3 4 5 6 7 8 10 11 12 13 14 15 16 17 18 19 20 21 0 1 2 3 4 5 6 7 8 9 11 12 13 14 15 16 17 18 19 20 21 0 1 2 3 4 5 6 7 8 9 10 12 13 14 15 16 17 18 19 20 21 0 1 2 3 4 5 6 7 8 9 10 11 13 14 15 16 17 18 19 20 21 0 1 2 3 4 5 6 7 8 9 10 11 12 14 15 16 17 18 19 20 21 0 1 2 3 4 5 6 7 8 9 10 11 12 13 15 16 17 18 19 20 21 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 16 17 18 19 20 21 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 17 18 19 20 21 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 18 19 20 21 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 19 20 21 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 20 21 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 21 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20\n"
    "group D11\n"
    "table: 22 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 1 2 3 4 5 6 7 8 9 10 0 12 13 14 15 16 17 18 19 20 21 11 2 3 4 5 6 7 8 9 10 0 1 13 14 15 16 17 18 19 20 21 11 12 3 4 5 6 7 8 9 10 0 1 2 14 15 16 17 18 19 20 21 11 12 13 4 5 6 7 8 9 10 0 1 2 3 15 16 17 18 19 20 21 11 12 13 14 5 6 7 8 9 10 0 1 2 3 4 16 17 18 19 20 21 11 12 13 14 15 6 7 8 9 10 0 1 2 3 4 5 17 18 19 20 21 11 12 13 14 15 16 7 8 9 10 0 1 2 3 4 5 6 18 19 20 21 11 12 13 14 15 16 17 8 9 10 0 1 2 3 4 5 6 7 19 20 21 11 12 13 14 15 16 17 18 9 10 0 1 2 3 4 5 6 7 8 20 21 11 12 13 14 15 16 17 18 19 10 0 1 2 3 4 5 6 7 8 9 21 11 12 13 14 15 16 17 18 19 20 11 21 20 19 18 17 16 15 14 13 12 0 10 9 8 7 6 5 4 3 2 1 12 11 21 20 19 18 17 16 15 14 13 1 0 10 9 8 7 6 5 4 3 2 13 12 11 21 20 19 18 17 16 15 14 2 1 0 10 9 8 7 6 5 4 3 14 13 12 11 21 20 19 18 17 16 15 3 2 1 0 10 9 8 7 6 5 4 15 14 13 12 11 21 20 19 18 17 16 4 3 2 1 0 10 9 8 7 6 5 16 15 14 13 12 11 21 20 19 18 17 5 4 3 2 1 0 10 9 8 7 6 17 16 15 14 13 12 11 21 20 19 18 6 5 4 3 2 1 0 10 9 8 7 18 17 16 15 14 13 12 11 21 20 19 7 6 5 4 3 2 1 0 10 9 8 19 18 17 16 15 14 13 12 11 21 20 8 7 6 5 4 3 2 1 0 10 9 20 19 18 17 16 15 14 13 12 11 21 9 8 7 6 5 4 3 2 1 0 10 21 20 19 18 17 16 15 14 13 12 11 10 9 8 7 6 5 4 3 2 1 0\n"
    "group C23\n"
    "table: 23 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 0 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 0 1 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 0 1 2 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 0 1 2 3 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 0 1 2 3 4 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 0 1 2 3 4 5 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 0 1 2 3 4 5 6 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 0 1 2 3 4 5 6 7 9 10 11 12 13 14 15 16 17 18 19 20 21 22 0 1 2 3 4 5 6 7 8 10 11 12 13 14 15 16 17 18 19 20 21 22 0 1 2 3 4 5 6 7 8 9 11 12 13 14 15 16 17 18 19 20 21 22 0 1 2 3 4 5 6 7 8 9 10 12 13 14 15 16 17 18 19 20 21 22 0 1 2 3 4 5 6 7 8 9 10 11 13 14 15 16 17 18 19 20 21 22 0 1 2 3 4 5 6 7 8 9 10 11 12 14 15 16 17 18 19 20 21 22 0 1 2 3 4 5 6 7 8 9 10 11 12 13 15 16 17 18 19 20 21 22 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 16 17 18 19 20 21 22 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 17 18 19 20 21 22 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 18 19 20 21 22 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 19 20 21 22 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 20 21 22 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 21 22 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 22 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21\n"
    "group C12xC2\n"
    "table: 24 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 23 1 0 3 2 5 4 7 6 9 8 11 10 13 12 15 14 17 16 19 18 21 20 23 22 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 23 0 1 3 2 5 4 7 6 9 8 11 10 13 12 15 14 17 16 19 18 21 20 23 22 1 0 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 23 0 1 2 3 5 4 7 6 9 8 11 10 13 12 15 14 17 16 19 18 21 20 23 22 1 0 3 2 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 23 0 1 2 3 4 5 7 6 9 8 11 10 13 12 15 14 17 16 19 18 21 20 23 22 1 0 3 2 5 4 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 23 0 1 2 3 4 5 6 7 9 8 11 10 13 12 15 14 17 16 19 18 21 20 23 22 1 0 3 2 5 4 7 6 10 11 12 13 14 15 16 17 18 19 20 21 22 23 0 1 2 3 4 5 6 7 8 9 11 10 13 12 15 14 17 16 19 18 21 20 23 22 1 0 3 2 5 4 7 6 9 8 12 13 14 15 16 17 18 19 20 21 22 23 0 1 2 3 4 5 6 7 8 9 10 11 13 12 15 14 17 16 19 18 21 20 23 22 1 0 3 2 5 4 7 6 9 8 11 10 14 15 16 17 18 19 20 21 22 23 0 1 2 3 4 5 6 7 8 9 10 11 12 13 15 14 17 16 19 18 21 20 23 22 1 0 3 2 5 4 7 6 9 8 11 10 13 12 16 17 18 19 20 21 22 23 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 17 16 19 18 21 20 23 22 1 0 3 2 5 4 7 6 9 8 11 10 13 12 15 14 18 19 20 21 22 23 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 19 18 21 20 23 22 1 0 3 2 5 4 7 6 9 8 11 10 13 12 15 14 17 16 20 21 22 23 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 21 20 23 22 1 0 3 2 5 4 7 6 9 8 11 10 13 12 15 14 17 16 19 18 22 23 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 23 22 1 0 3 2 5 4 7 6 9 8 11 10 13 12 15 14 17 16 19 18 21 20\n"
    "group C24\n"
    "table: 24 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 23 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 23 0 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 23 0 1 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 23 0 1 2 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 23 0 1 2 3 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 23 0 1 2 3 4 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 23 0 1 2 3 4 5 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 23 0 1 2 3 4 5 6 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 23 0 1 2 3 4 5 6 7 9 10 11 12 13 14 15 16 17 18 19 20 21 22 23 0 1 2 3 4 5 6 7 8 10 11 12 13 14 15 16 17 18 19 20 21 22 23 0 1 2 3 4 5 6 7 8 9 11 12 13 14 15 16 17 18 19 20 21 22 23 0 1 2 3 4 5 6 7 8 9 10 12 13 14 15 16 17 18 19 20 21 22 23 0 1 2 3 4 5 6 7 8 9 10 11 13 14 15 16 17 18 19 20 21 22 23 0 1 2 3 4 5 6 7 8 9 10 11 12 14 15 16 17 18 19 20 21 22 23 0 1 2 3 4 5 6 7 8 9 10 11 12 13 15 16 17 18 19 20 21 22 23 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 16 17 18 19 20 21 22 23 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 17 18 19 20 21 22 23 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 18 19 20 21 22 23 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 19 20 21 22 23 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 20 21 22 23 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 21 22 23 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 22 23 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 23 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22\n"
    "group C2xA4\n"
    "table: 24 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 23 1 2 0 6 8 7 9 11 10 3 4 5 13 14 12 18 20 19 21 23 22 15 16 17 2 0 1 9 10 11 3 5 4 6 8 7 14 12 13 21 22 23 15 17 16 18 20 19 3 5 4 0 2 1 10 9 11 7 6 8 15 17 16 12 14 13 22 21 23 19 18 20 4 3 5 7 6 8 0 1 2 10 11 9 16 15 17 19 18 20 12 13 14 22 23 21 5 4 3 10 11 9 7 8 6 0 2 1 17 16 15 22 23 21 19 20 18 12 14 13 6 7 8 1 0 2 4 3 5 11 9 10 18 19 20 13 12 14 16 15 17 23 21 22 7 8 6 4 5 3 11 10 9 1 0 2 19 20 18 16 17 15 23 22 21 13 12 14 8 6 7 11 9 10 1 2 0 4 5 3 20 18 19 23 21 22 13 14 12 16 17 15 9 11 10 2 1 0 8 6 7 5 3 4 21 23 22 14 13 12 20 18 19 17 15 16 10 9 11 5 3 4 2 0 1 8 7 6 22 21 23 17 15 16 14 12 13 20 19 18 11 10 9 8 7 6 5 4 3 2 1 0 23 22 21 20 19 18 17 16 15 14 13 12 12 13 14 15 16 17 18 19 20 21 22 23 0 1 2 3 4 5 6 7 8 9 10 11 13 14 12 18 20 19 21 23 22 15 16 17 1 2 0 6 8 7 9 11 10 3 4 5 14 12 13 21 22 23 15 17 16 18 20 19 2 0 1 9 10 11 3 5 4 6 8 7 15 17 16 12 14 13 22 21 23 19 18 20 3 5 4 0 2 1 10 9 11 7 6 8 16 15 17 19 18 20 12 13 14 22 23 21 4 3 5 7 6 8 0 1 2 10 11 9 17 16 15 22 23 21 19 20 18 12 14 13 5 4 3 10 11 9 7 8 6 0 2 1 18 19 20 13 12 14 16 15 17 23 21 22 6 7 8 1 0 2 4 3 5 11 9 10 19 20 18 16 17 15 23 22 21 13 12 14 7 8 6 4 5 3 11 10 9 1 0 2 20 18 19 23 21 22 13 14 12 16 17 15 8 6 7 11 9 10 1 2 0 4 5 3 21 23 22 14 13 12 20 18 19 17 15 16 9 11 10 2 1 0 8 6 7 5 3 4 22 21 23 17 15 16 14 12 13 20 19 18 10 9 11 5 3 4 2 0 1 8 7 6 23 22 21 20 19 18 17 16 15 14 13 12 11 10 9 8 7 6 5 4 3 2 1 0\n"
    "group C2xDic3\n"
    "table: 24 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 23 1 2 3 4 5 0 7 8 9 10 11 6 13 14 15 16 17 12 19 20 21 22 23 18 2 3 4 5 0 1 8 9 10 11 6 7 14 15 16 17 12 13 20 21 22 23 18 19 3 4 5 0 1 2 9 10 11 6 7 8 15 16 17 12 13 14 21 22 23 18 19 20 4 5 0 1 2 3 10 11 6 7 8 9 16 17 12 13 14 15 22 23 18 19 20 21 5 0 1 2 3 4 11 6 7 8 9 10 17 12 13 14 15 16 23 18 19 20 21 22 6 11 10 9 8 7 3 2 1 0 5 4 18 23 22 21 20 19 15 14 13 12 17 16 7 6 11 10 9 8 4 3 2 1 0 5 19 18 23 22 21 20 16 15 14 13 12 17 8 7 6 11 10 9 5 4 3 2 1 0 20 19 18 23 22 21 17 16 15 14 13 12 9 8 7 6 11 10 0 5 4 3 2 1 21 20 19 18 23 22 12 17 16 15 14 13 10 9 8 7 6 11 1 0 5 4 3 2 22 21 20 19 18 23 13 12 17 16 15 14 11 10 9 8 7 6 2 1 0 5 4 3 23 22 21 20 19 18 14 13 12 17 16 15 12 13 14 15 16 17 18 19 20 21 22 23 0 1 2 3 4 5 6 7 8 9 10 11 13 14 15 16 17 12 19 20 21 22 23 18 1 2 3 4 5 0 7 8 9 10 11 6 14 15 16 17 12 13 20 21 22 23 18 19 2 3 4 5 0 1 8 9 10 11 6 7 15 16 17 12 13 14 21 22 23 18 19 20 3 4 5 0 1 2 9 10 11 6 7 8 16 17 12 13 14 15 22 23 18 19 20 21 4 5 0 1 2 3 10 11 6 7 8 9 17 12 13 14 15 16 23 18 19 20 21 22 5 0 1 2 3 4 11 6 7 8 9 10 18 23 22 21 20 19 15 14 13 12 17 16 6 11 10 9 8 7 3 2 1 0 5 4 19 18 23 22 21 20 16 15 14 13 12 17 7 6 11 10 9 8 4 3 2 1 0 5 20 19 18 23 22 21 17 16 15 14 13 12 8 7 6 11 10 9 5 4 3 2 1 0 21 20 19 18 23 22 12 17 16 15 14 13 9 8 7 6 11 10 0 5 4 3 2 1 22 21 20 19 18 23 13 12 17 16 15 14 10 9 8 7 6 11 1 0 5 4 3 2 23 22 21 20 19 18 14 13 12 17 16 15 11 10 9 8 7 6 2 1 0 5 4 3\n"
    "group C3sC8\n"
    "table: 24 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 23 1 2 0 4 5 3 7 8 6 10 11 9 13 14 12 16 17 15 19 20 18 22 23 21 2 0 1 5 3 4 8 6 7 11 9 10 14 12 13 17 15 16 20 18 19 23 21 22 3 5 4 6 8 7 9 11 10 12 14 13 15 17 16 18 20 19 21 23 22 0 2 1 4 3 5 7 6 8 10 9 11 13 12 14 16 15 17 19 18 20 22 21 23 1 0 2 5 4 3 8 7 6 11 10 9 14 13 12 17 16 15 20 19 18 23 22 21 2 1 0 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 23 0 1 2 3 4 5 7 8 6 10 11 9 13 14 12 16 17 15 19 20 18 22 23 21 1 2 0 4 5 3 8 6 7 11 9 10 14 12 13 17 15 16 20 18 19 23 21 22 2 0 1 5 3 4 9 11 10 12 14 13 15 17 16 18 20 19 21 23 22 0 2 1 3 5 4 6 8 7 10 9 11 13 12 14 16 15 17 19 18 20 22 21 23 1 0 2 4 3 5 7 6 8 11 10 9 14 13 12 17 16 15 20 19 18 23 22 21 2 1 0 5 4 3 8 7 6 12 13 14 15 16 17 18 19 20 21 22 23 0 1 2 3 4 5 6 7 8 9 10 11 13 14 12 16 17 15 19 20 18 22 23 21 1 2 0 4 5 3 7 8 6 10 11 9 14 12 13 17 15 16 20 18 19 23 21 22 2 0 1 5 3 4 8 6 7 11 9 10 15 17 16 18 20 19 21 23 22 0 2 1 3 5 4 6 8 7 9 11 10 12 14 13 16 15 17 19 18 20 22 21 23 1 0 2 4 3 5 7 6 8 10 9 11 13 12 14 17 16 15 20 19 18 23 22 21 2 1 0 5 4 3 8 7 6 11 10 9 14 13 12 18 19 20 21 22 23 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 19 20 18 22 23 21 1 2 0 4 5 3 7 8 6 10 11 9 13 14 12 16 17 15 20 18 19 23 21 22 2 0 1 5 3 4 8 6 7 11 9 10 14 12 13 17 15 16 21 23 22 0 2 1 3 5 4 6 8 7 9 11 10 12 14 13 15 17 16 18 20 19 22 21 23 1 0 2 4 3 5 7 6 8 10 9 11 13 12 14 16 15 17 19 18 20 23 22 21 2 1 0 5 4 3 8 7 6 11 10 9 14 13 12 17 16 15 20 19 18\n"
    "group C3sD4\n"
    "table: 24 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 23 1 0 3 2 5 4 7 6 9 8 11 10 13 12 15 14 17 16 19 18 21 20 23 22 2 3 4 5 6 7 8 9 10 11 0 1 14 15 16 17 18 19 20 21 22 23 12 13 3 2 5 4 7 6 9 8 11 10 1 0 15 14 17 16 19 18 21 20 23 22 13 12 4 5 6 7 8 9 10 11 0 1 2 3 16 17 18 19 20 21 22 23 12 13 14 15 5 4 7 6 9 8 11 10 1 0 3 2 17 16 19 18 21 20 23 22 13 12 15 14 6 7 8 9 10 11 0 1 2 3 4 5 18 19 20 21 22 23 12 13 14 15 16 17 7 6 9 8 11 10 1 0 3 2 5 4 19 18 21 20 23 22 13 12 15 14 17 16 8 9 10 11 0 1 2 3 4 5 6 7 20 21 22 23 12 13 14 15 16 17 18 19 9 8 11 10 1 0 3 2 5 4 7 6 21 20 23 22 13 12 15 14 17 16 19 18 10 11 0 1 2 3 4 5 6 7 8 9 22 23 12 13 14 15 16 17 18 19 20 21 11 10 1 0 3 2 5 4 7 6 9 8 23 22 13 12 15 14 17 16 19 18 21 20 12 13 23 22 20 21 19 18 16 17 15 14 0 1 11 10 8 9 7 6 4 5 3 2 13 12 22 23 21 20 18 19 17 16 14 15 1 0 10 11 9 8 6 7 5 4 2 3 14 15 13 12 22 23 21 20 18 19 17 16 2 3 1 0 10 11 9 8 6 7 5 4 15 14 12 13 23 22 20 21 19 18 16 17 3 2 0 1 11 10 8 9 7 6 4 5 16 17 15 14 12 13 23 22 20 21 19 18 4 5 3 2 0 1 11 10 8 9 7 6 17 16 14 15 13 12 22 23 21 20 18 19 5 4 2 3 1 0 10 11 9 8 6 7 18 19 17 16 14 15 13 12 22 23 21 20 6 7 5 4 2 3 1 0 10 11 9 8 19 18 16 17 15 14 12 13 23 22 20 21 7 6 4 5 3 2 0 1 11 10 8 9 20 21 19 18 16 17 15 14 12 13 23 22 8 9 7 6 4 5 3 2 0 1 11 10 21 20 18 19 17 16 14 15 13 12 22 23 9 8 6 7 5 4 2 3 1 0 10 11 22 23 21 20 18 19 17 16 14 15 13 12 10 11 9 8 6 7 5 4 2 3 1 0 23 22 20 21 19 18 16 17 15 14 12 13 11 10 8 9 7 6 4 5 3 2 0 1\n"
    "group C3xD4\n"
    "table: 24 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 23 1 2 3 0 5 6 7 4 9 10 11 8 13 14 15 12 17 18 19 16 21 22 23 20 2 3 0 1 6 7 4 5 10 11 8 9 14 15 12 13 18 19 16 17 22 23 20 21 3 0 1 2 7 4 5 6 11 8 9 10 15 12 13 14 19 16 17 18 23 20 21 22 4 7 6 5 0 3 2 1 12 15 14 13 8 11 10 9 20 23 22 21 16 19 18 17 5 4 7 6 1 0 3 2 13 12 15 14 9 8 11 10 21 20 23 22 17 16 19 18 6 5 4 7 2 1 0 3 14 13 12 15 10 9 8 11 22 21 20 23 18 17 16 19 7 6 5 4 3 2 1 0 15 14 13 12 11 10 9 8 23 22 21 20 19 18 17 16 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 23 0 1 2 3 4 5 6 7 9 10 11 8 13 14 15 12 17 18 19 16 21 22 23 20 1 2 3 0 5 6 7 4 10 11 8 9 14 15 12 13 18 19 16 17 22 23 20 21 2 3 0 1 6 7 4 5 11 8 9 10 15 12 13 14 19 16 17 18 23 20 21 22 3 0 1 2 7 4 5 6 12 15 14 13 8 11 10 9 20 23 22 21 16 19 18 17 4 7 6 5 0 3 2 1 13 12 15 14 9 8 11 10 21 20 23 22 17 16 19 18 5 4 7 6 1 0 3 2 14 13 12 15 10 9 8 11 22 21 20 23 18 17 16 19 6 5 4 7 2 1 0 3 15 14 13 12 11 10 9 8 23 22 21 20 19 18 17 16 7 6 5 4 3 2 1 0 16 17 18 19 20 21 22 23 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 17 18 19 16 21 22 23 20 1 2 3 0 5 6 7 4 9 10 11 8 13 14 15 12 18 19 16 17 22 23 20 21 2 3 0 1 6 7 4 5 10 11 8 9 14 15 12 13 19 16 17 18 23 20 21 22 3 0 1 2 7 4 5 6 11 8 9 10 15 12 13 14 20 23 22 21 16 19 18 17 4 7 6 5 0 3 2 1 12 15 14 13 8 11 10 9 21 20 23 22 17 16 19 18 5 4 7 6 1 0 3 2 13 12 15 14 9 8 11 10 22 21 20 23 18 17 16 19 6 5 4 7 2 1 0 3 14 13 12 15 10 9 8 11 23 22 21 20 19 18 17 16 7 6 5 4 3 2 1 0 15 14 13 12 11 10 9 8\n"
    "group C3xQ8\n"
    "table: 24 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 23 1 2 3 0 5 6 7 4 9 10 11 8 13 14 15 12 17 18 19 16 21 22 23 20 2 3 0 1 6 7 4 5 10 11 8 9 14 15 12 13 18 19 16 17 22 23 20 21 3 0 1 2 7 4 5 6 11 8 9 10 15 12 13 14 19 16 17 18 23 20 21 22 4 7 6 5 2 1 0 3 12 15 14 13 10 9 8 11 20 23 22 21 18 17 16 19 5 4 7 6 3 2 1 0 13 12 15 14 11 10 9 8 21 20 23 22 19 18 17 16 6 5 4 7 0 3 2 1 14 13 12 15 8 11 10 9 22 21 20 23 16 19 18 17 7 6 5 4 1 0 3 2 15 14 13 12 9 8 11 10 23 22 21 20 17 16 19 18 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 23 0 1 2 3 4 5 6 7 9 10 11 8 13 14 15 12 17 18 19 16 21 22 23 20 1 2 3 0 5 6 7 4 10 11 8 9 14 15 12 13 18 19 16 17 22 23 20 21 2 3 0 1 6 7 4 5 11 8 9 10 15 12 13 14 19 16 17 18 23 20 21 22 3 0 1 2 7 4 5 6 12 15 14 13 10 9 8 11 20 23 22 21 18 17 16 19 4 7 6 5 2 1 0 3 13 12 15 14 11 10 9 8 21 20 23 22 19 18 17 16 5 4 7 6 3 2 1 0 14 13 12 15 8 11 10 9 22 21 20 23 16 19 18 17 6 5 4 7 0 3 2 1 15 14 13 12 9 8 11 10 23 22 21 20 17 16 19 18 7 6 5 4 1 0 3 2 16 17 18 19 20 21 22 23 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 17 18 19 16 21 22 23 20 1 2 3 0 5 6 7 4 9 10 11 8 13 14 15 12 18 19 16 17 22 23 20 21 2 3 0 1 6 7 4 5 10 11 8 9 14 15 12 13 19 16 17 18 23 20 21 22 3 0 1 2 7 4 5 6 11 8 9 10 15 12 13 14 20 23 22 21 18 17 16 19 4 7 6 5 2 1 0 3 12 15 14 13 10 9 8 11 21 20 23 22 19 18 17 16 5 4 7 6 3 2 1 0 13 12 15 14 11 10 9 8 22 21 20 23 16 19 18 17 6 5 4 7 0 3 2 1 14 13 12 15 8 11 10 9 23 22 21 20 17 16 19 18 7 6 5 4 1 0 3 2 15 14 13 12 9 8 11 10\n"
    "group C4xS3\n"
    "table: 24 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 23 1 0 4 5 2 3 7 6 10 11 8 9 13 12 16 17 14 15 19 18 22 23 20 21 2 3 0 1 5 4 8 9 6 7 11 10 14 15 12 13 17 16 20 21 18 19 23 22 3 2 5 4 0 1 9 8 11 10 6 7 15 14 17 16 12 13 21 20 23 22 18 19 4 5 1 0 3 2 10 11 7 6 9 8 16 17 13 12 15 14 22 23 19 18 21 20 5 4 3 2 1 0 11 10 9 8 7 6 17 16 15 14 13 12 23 22 21 20 19 18 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 23 0 1 2 3 4 5 7 6 10 11 8 9 13 12 16 17 14 15 19 18 22 23 20 21 1 0 4 5 2 3 8 9 6 7 11 10 14 15 12 13 17 16 20 21 18 19 23 22 2 3 0 1 5 4 9 8 11 10 6 7 15 14 17 16 12 13 21 20 23 22 18 19 3 2 5 4 0 1 10 11 7 6 9 8 16 17 13 12 15 14 22 23 19 18 21 20 4 5 1 0 3 2 11 10 9 8 7 6 17 16 15 14 13 12 23 22 21 20 19 18 5 4 3 2 1 0 12 13 14 15 16 17 18 19 20 21 22 23 0 1 2 3 4 5 6 7 8 9 10 11 13 12 16 17 14 15 19 18 22 23 20 21 1 0 4 5 2 3 7 6 10 11 8 9 14 15 12 13 17 16 20 21 18 19 23 22 2 3 0 1 5 4 8 9 6 7 11 10 15 14 17 16 12 13 21 20 23 22 18 19 3 2 5 4 0 1 9 8 11 10 6 7 16 17 13 12 15 14 22 23 19 18 21 20 4 5 1 0 3 2 10 11 7 6 9 8 17 16 15 14 13 12 23 22 21 20 19 18 5 4 3 2 1 0 11 10 9 8 7 6 18 19 20 21 22 23 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 19 18 22 23 20 21 1 0 4 5 2 3 7 6 10 11 8 9 13 12 16 17 14 15 20 21 18 19 23 22 2 3 0 1 5 4 8 9 6 7 11 10 14 15 12 13 17 16 21 20 23 22 18 19 3 2 5 4 0 1 9 8 11 10 6 7 15 14 17 16 12 13 22 23 19 18 21 20 4 5 1 0 3 2 10 11 7 6 9 8 16 17 13 12 15 14 23 22 21 20 19 18 5 4 3 2 1 0 11 10 9 8 7 6 17 16 15 14 13 12\n"
    "group C6xC2xC2\n"
    "table: 24 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 23 1 0 3 2 5 4 7 6 9 8 11 10 13 12 15 14 17 16 19 18 21 20 23 22 2 3 0 1 6 7 4 5 10 11 8 9 14 15 12 13 18 19 16 17 22 23 20 21 3 2 1 0 7 6 5 4 11 10 9 8 15 14 13 12 19 18 17 16 23 22 21 20 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 23 0 1 2 3 5 4 7 6 9 8 11 10 13 12 15 14 17 16 19 18 21 20 23 22 1 0 3 2 6 7 4 5 10 11 8 9 14 15 12 13 18 19 16 17 22 23 20 21 2 3 0 1 7 6 5 4 11 10 9 8 15 14 13 12 19 18 17 16 23 22 21 20 3 2 1 0 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 23 0 1 2 3 4 5 6 7 9 8 11 10 13 12 15 14 17 16 19 18 21 20 23 22 1 0 3 2 5 4 7 6 10 11 8 9 14 15 12 13 18 19 16 17 22 23 20 21 2 3 0 1 6 7 4 5 11 10 9 8 15 14 13 12 19 18 17 16 23 22 21 20 3 2 1 0 7 6 5 4 12 13 14 15 16 17 18 19 20 21 22 23 0 1 2 3 4 5 6 7 8 9 10 11 13 12 15 14 17 16 19 18 21 20 23 22 1 0 3 2 5 4 7 6 9 8 11 10 14 15 12 13 18 19 16 17 22 23 20 21 2 3 0 1 6 7 4 5 10 11 8 9 15 14 13 12 19 18 17 16 23 22 21 20 3 2 1 0 7 6 5 4 11 10 9 8 16 17 18 19 20 21 22 23 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 17 16 19 18 21 20 23 22 1 0 3 2 5 4 7 6 9 8 11 10 13 12 15 14 18 19 16 17 22 23 20 21 2 3 0 1 6 7 4 5 10 11 8 9 14 15 12 13 19 18 17 16 23 22 21 20 3 2 1 0 7 6 5 4 11 10 9 8 15 14 13 12 20 21 22 23 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 21 20 23 22 1 0 3 2 5 4 7 6 9 8 11 10 13 12 15 14 17 16 19 18 22 23 20 21 2 3 0 1 6 7 4 5 10 11 8 9 14 15 12 13 18 19 16 17 23 22 21 20 3 2 1 0 7 6 5 4 11 10 9 8 15 14 13 12 19 18 17 16\n"
    "group D12\n"
    "table: 24 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 23 1 2 3 4 5 6 7 8 9 10 11 0 13 14 15 16 17 18 19 20 21 22 23 12 2 3 4 5 6 7 8 9 10 11 0 1 14 15 16 17 18 19 20 21 22 23 12 13 3 4 5 6 7 8 9 10 11 0 1 2 15 16 17 18 19 20 21 22 23 12 13 14 4 5 6 7 8 9 10 11 0 1 2 3 16 17 18 19 20 21 22 23 12 13 14 15 5 6 7 8 9 10 11 0 1 2 3 4 17 18 19 20 21 22 23 12 13 14 15 16 6 7 8 9 10 11 0 1 2 3 4 5 18 19 20 21 22 23 12 13 14 15 16 17 7 8 9 10 11 0 1 2 3 4 5 6 19 20 21 22 23 12 13 14 15 16 17 18 8 9 10 11 0 1 2 3 4 5 6 7 20 21 22 23 12 13 14 15 16 17 18 19 9 10 11 0 1 2 3 4 5 6 7 8 21 22 23 12 13 14 15 16 17 18 19 20 10 11 0 1 2 3 4 5 6 7 8 9 22 23 12 13 14 15 16 17 18 19 20 21 11 0 1 2 3 4 5 6 7 8 9 10 23 12 13 14 15 16 17 18 19 20 21 22 12 23 22 21 20 19 18 17 16 15 14 13 0 11 10 9 8 7 6 5 4 3 2 1 13 12 23 22 21 20 19 18 17 16 15 14 1 0 11 10 9 8 7 6 5 4 3 2 14 13 12 23 22 21 20 19 18 17 16 15 2 1 0 11 10 9 8 7 6 5 4 3 15 14 13 12 23 22 21 20 19 18 17 16 3 2 1 0 11 10 9 8 7 6 5 4 16 15 14 13 12 23 22 21 20 19 18 17 4 3 2 1 0 11 10 9 8 7 6 5 17 16 15 14 13 12 23 22 21 20 19 18 5 4 3 2 1 0 11 10 9 8 7 6 18 17 16 15 14 13 12 23 22 21 20 19 6 5 4 3 2 1 0 11 10 9 8 7 19 18 17 16 15 14 13 12 23 22 21 20 7 6 5 4 3 2 1 0 11 10 9 8 20 19 18 17 16 15 14 13 12 23 22 21 8 7 6 5 4 3 2 1 0 11 10 9 21 20 19 18 17 16 15 14 13 12 23 22 9 8 7 6 5 4 3 2 1 0 11 10 22 21 20 19 18 17 16 15 14 13 12 23 10 9 8 7 6 5 4 3 2 1 0 11 23 22 21 20 19 18 17 16 15 14 13 12 11 10 9 8 7 6 5 4 3 2 1 0\n"
    "group D6xC2\n"
    "table: 24 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 23 1 0 3 2 5 4 7 6 9 8 11 10 13 12 15 14 17 16 19 18 21 20 23 22 2 3 4 5 6 7 8 9 10 11 0 1 14 15 16 17 18 19 20 21 22 23 12 13 3 2 5 4 7 6 9 8 11 10 1 0 15 14 17 16 19 18 21 20 23 22 13 12 4 5 6 7 8 9 10 11 0 1 2 3 16 17 18 19 20 21 22 23 12 13 14 15 5 4 7 6 9 8 11 10 1 0 3 2 17 16 19 18 21 20 23 22 13 12 15 14 6 7 8 9 10 11 0 1 2 3 4 5 18 19 20 21 22 23 12 13 14 15 16 17 7 6 9 8 11 10 1 0 3 2 5 4 19 18 21 20 23 22 13 12 15 14 17 16 8 9 10 11 0 1 2 3 4 5 6 7 20 21 22 23 12 13 14 15 16 17 18 19 9 8 11 10 1 0 3 2 5 4 7 6 21 20 23 22 13 12 15 14 17 16 19 18 10 11 0 1 2 3 4 5 6 7 8 9 22 23 12 13 14 15 16 17 18 19 20 21 11 10 1 0 3 2 5 4 7 6 9 8 23 22 13 12 15 14 17 16 19 18 21 20 12 13 22 23 20 21 18 19 16 17 14 15 0 1 10 11 8 9 6 7 4 5 2 3 13 12 23 22 21 20 19 18 17 16 15 14 1 0 11 10 9 8 7 6 5 4 3 2 14 15 12 13 22 23 20 21 18 19 16 17 2 3 0 1 10 11 8 9 6 7 4 5 15 14 13 12 23 22 21 20 19 18 17 16 3 2 1 0 11 10 9 8 7 6 5 4 16 17 14 15 12 13 22 23 20 21 18 19 4 5 2 3 0 1 10 11 8 9 6 7 17 16 15 14 13 12 23 22 21 20 19 18 5 4 3 2 1 0 11 10 9 8 7 6 18 19 16 17 14 15 12 13 22 23 20 21 6 7 4 5 2 3 0 1 10 11 8 9 19 18 17 16 15 14 13 12 23 22 21 20 7 6 5 4 3 2 1 0 11 10 9 8 20 21 18 19 16 17 14 15 12 13 22 23 8 9 6 7 4 5 2 3 0 1 10 11 21 20 19 18 17 16 15 14 13 12 23 22 9 8 7 6 5 4 3 2 1 0 11 10 22 23 20 21 18 19 16 17 14 15 12 13 10 11 8 9 6 7 4 5 2 3 0 1 23 22 21 20 19 18 17 16 15 14 13 12 11 10 9 8 7 6 5 4 3 2 1 0\n"
    "group Dic6\n"
    "table: 24 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 23 1 2 3 4 5 6 7 8 9 10 11 0 13 14 15 16 17 18 19 20 21 22 23 12 2 3 4 5 6 7 8 9 10 11 0 1 14 15 16 17 18 19 20 21 22 23 12 13 3 4 5 6 7 8 9 10 11 0 1 2 15 16 17 18 19 20 21 22 23 12 13 14 4 5 6 7 8 9 10 11 0 1 2 3 16 17 18 19 20 21 22 23 12 13 14 15 5 6 7 8 9 10 11 0 1 2 3 4 17 18 19 20 21 22 23 12 13 14 15 16 6 7 8 9 10 11 0 1 2 3 4 5 18 19 20 21 22 23 12 13 14 15 16 17 7 8 9 10 11 0 1 2 3 4 5 6 19 20 21 22 23 12 13 14 15 16 17 18 8 9 10 11 0 1 2 3 4 5 6 7 20 21 22 23 12 13 14 15 16 17 18 19 9 10 11 0 1 2 3 4 5 6 7 8 21 22 23 12 13 14 15 16 17 18 19 20 10 11 0 1 2 3 4 5 6 7 8 9 22 23 12 13 14 15 16 17 18 19 20 21 11 0 1 2 3 4 5 6 7 8 9 10 23 12 13 14 15 16 17 18 19 20 21 22 12 23 22 21 20 19 18 17 16 15 14 13 6 5 4 3 2 1 0 11 10 9 8 7 13 12 23 22 21 20 19 18 17 16 15 14 7 6 5 4 3 2 1 0 11 10 9 8 14 13 12 23 22 21 20 19 18 17 16 15 8 7 6 5 4 3 2 1 0 11 10 9 15 14 13 12 23 22 21 20 19 18 17 16 9 8 7 6 5 4 3 2 1 0 11 10 16 15 14 13 12 23 22 21 20 19 18 17 10 9 8 7 6 5 4 3 2 1 0 11 17 16 15 14 13 12 23 22 21 20 19 18 11 10 9 8 7 6 5 4 3 2 1 0 18 17 16 15 14 13 12 23 22 21 20 19 0 11 10 9 8 7 6 5 4 3 2 1 19 18 17 16 15 14 13 12 23 22 21 20 1 0 11 10 9 8 7 6 5 4 3 2 20 19 18 17 16 15 14 13 12 23 22 21 2 1 0 11 10 9 8 7 6 5 4 3 21 20 19 18 17 16 15 14 13 12 23 22 3 2 1 0 11 10 9 8 7 6 5 4 22 21 20 19 18 17 16 15 14 13 12 23 4 3 2 1 0 11 10 9 8 7 6 5 23 22 21 20 19 18 17 16 15 14 13 12 5 4 3 2 1 0 11 10 9 8 7 6\n"
    "group S4\n"
    "table: 24 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 23 1 0 4 5 2 3 7 6 10 11 8 9 18 19 20 21 22 23 12 13 14 15 16 17 2 3 0 1 5 4 12 13 14 15 16 17 6 7 8 9 10 11 19 18 22 23 20 21 3 2 5 4 0 1 13 12 16 17 14 15 19 18 22 23 20 21 6 7 8 9 10 11 4 5 1 0 3 2 18 19 20 21 22 23 7 6 10 11 8 9 13 12 16 17 14 15 5 4 3 2 1 0 19 18 22 23 20 21 13 12 16 17 14 15 7 6 10 11 8 9 6 7 8 9 10 11 0 1 2 3 4 5 14 15 12 13 17 16 20 21 18 19 23 22 7 6 10 11 8 9 1 0 4 5 2 3 20 21 18 19 23 22 14 15 12 13 17 16 8 9 6 7 11 10 14 15 12 13 17 16 0 1 2 3 4 5 21 20 23 22 18 19 9 8 11 10 6 7 15 14 17 16 12 13 21 20 23 22 18 19 0 1 2 3 4 5 10 11 7 6 9 8 20 21 18 19 23 22 1 0 4 5 2 3 15 14 17 16 12 13 11 10 9 8 7 6 21 20 23 22 18 19 15 14 17 16 12 13 1 0 4 5 2 3 12 13 14 15 16 17 2 3 0 1 5 4 8 9 6 7 11 10 22 23 19 18 21 20 13 12 16 17 14 15 3 2 5 4 0 1 22 23 19 18 21 20 8 9 6 7 11 10 14 15 12 13 17 16 8 9 6 7 11 10 2 3 0 1 5 4 23 22 21 20 19 18 15 14 17 16 12 13 9 8 11 10 6 7 23 22 21 20 19 18 2 3 0 1 5 4 16 17 13 12 15 14 22 23 19 18 21 20 3 2 5 4 0 1 9 8 11 10 6 7 17 16 15 14 13 12 23 22 21 20 19 18 9 8 11 10 6 7 3 2 5 4 0 1 18 19 20 21 22 23 4 5 1 0 3 2 10 11 7 6 9 8 16 17 13 12 15 14 19 18 22 23 20 21 5 4 3 2 1 0 16 17 13 12 15 14 10 11 7 6 9 8 20 21 18 19 23 22 10 11 7 6 9 8 4 5 1 0 3 2 17 16 15 14 13 12 21 20 23 22 18 19 11 10 9 8 7 6 17 16 15 14 13 12 4 5 1 0 3 2 22 23 19 18 21 20 16 17 13 12 15 14 5 4 3 2 1 0 11 10 9 8 7 6 23 22 21 20 19 18 17 16 15 14 13 12 11 10 9 8 7 6 5 4 3 2 1 0\n"
    "group SL2_3\n"
    "table: 24 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22 23 1 15 18 21 0 9 12 11 20 3 14 17 2 8 23 4 13 22 6 10 16 5 7 19 2 17 20 23 7 10 13 9 19 1 12 16 3 0 22 6 14 21 5 11 15 4 8 18 3 16 19 22 8 11 14 10 18 2 13 15 1 7 21 5 12 23 4 9 17 6 0 20 4 0 12 9 15 21 18 22 13 5 19 7 6 16 10 1 20 11 2 23 8 3 17 14 5 8 14 11 16 22 19 23 12 6 20 0 4 17 9 3 18 10 1 21 7 2 15 13 6 7 13 10 17 23 20 21 14 4 18 8 5 15 11 2 19 9 3 22 0 1 16 12 7 2 3 1 6 4 5 8 0 10 11 9 13 14 12 17 15 16 20 18 19 23 21 22 8 3 1 2 5 6 4 0 7 11 9 10 14 12 13 16 17 15 19 20 18 22 23 21 9 20 23 17 13 7 10 19 2 12 16 1 0 22 3 21 6 14 15 5 11 18 4 8 10 19 22 16 14 8 11 18 3 13 15 2 7 21 1 23 5 12 17 4 9 20 6 0 11 18 21 15 12 0 9 20 1 14 17 3 8 23 2 22 4 13 16 6 10 19 5 7 12 11 8 14 22 19 16 5 23 0 6 20 9 4 17 18 10 3 21 7 1 15 13 2 13 9 0 12 21 18 15 4 22 7 5 19 10 6 16 20 11 1 23 8 2 17 14 3 14 10 7 13 23 20 17 6 21 8 4 18 11 5 15 19 9 2 22 0 3 16 12 1 15 4 6 5 1 3 2 17 16 21 23 22 18 20 19 0 8 7 12 14 13 9 11 10 16 5 4 6 3 2 1 15 17 22 21 23 19 18 20 8 7 0 14 13 12 11 10 9 17 6 5 4 2 1 3 16 15 23 22 21 20 19 18 7 0 8 13 12 14 10 9 11 18 22 16 19 11 14 8 3 10 15 2 13 21 1 7 12 23 5 9 17 4 0 20 6 19 23 17 20 10 13 7 2 9 16 1 12 22 3 0 14 21 6 11 15 5 8 18 4 20 21 15 18 9 12 0 1 11 17 3 14 23 2 8 13 22 4 10 16 6 7 19 5 21 13 10 7 20 17 23 14 6 18 8 4 15 11 5 9 2 19 0 3 22 12 1 16 22 12 9 0 18 15 21 13 4 19 7 5 16 10 6 11 1 20 8 2 23 14 3 17 23 14 11 8 19 16 22 12 5 20 0 6 17 9 4 10 3 18 7 1 21 13 2 15\n"
    "\n"
  ;
}

}  // namespace socle
