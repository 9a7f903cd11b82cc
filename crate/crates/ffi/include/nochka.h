#ifndef NOCHKA_H
#define NOCHKA_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum NochkaStatus {
  NOCHKA_STATUS_OK = 0,
  NOCHKA_STATUS_VIOLATION = 1,
  NOCHKA_STATUS_HYPOTHESIS = 2,
  NOCHKA_STATUS_INPUT = 3,
  NOCHKA_STATUS_NULL_POINTER = 4,
  NOCHKA_STATUS_PANIC = 5,
} NochkaStatus;

typedef enum NochkaMode {
  NOCHKA_MODE_EXACT = 0,
  NOCHKA_MODE_NUMERIC = 1,
  NOCHKA_MODE_BOTH = 2,
} NochkaMode;

/**
 * Opaque scene handle.
 */
typedef struct NochkaScene NochkaScene;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses a scene. On success `*out` owns a handle to release with `nochka_scene_free`.
 *
 * # Safety
 * `json` must be a nul-terminated string and `out` a valid pointer.
 */
enum NochkaStatus nochka_scene_from_json(const char *json, struct NochkaScene **out);

/**
 * # Safety
 * `scene` must come from `nochka_scene_from_json` and not be freed twice. Null is ignored.
 */
void nochka_scene_free(struct NochkaScene *scene);

/**
 * # Safety
 * `scene` must be a live handle and `out_json` a valid pointer.
 */
enum NochkaStatus nochka_check_position(const struct NochkaScene *scene, char **out_json);

/**
 * # Safety
 * `scene` must be a live handle and `out_json` a valid pointer.
 */
enum NochkaStatus nochka_weights(const struct NochkaScene *scene, char **out_json);

/**
 * Numeric mode uses the default radii and slack constants unless the scene sets radii.
 *
 * # Safety
 * `scene` must be a live handle and `out_json` a valid pointer.
 */
enum NochkaStatus nochka_verify(const struct NochkaScene *scene,
                                enum NochkaMode mode,
                                char **out_json);

/**
 * # Safety
 * `scene` must be a live handle and `out_json` a valid pointer.
 */
enum NochkaStatus nochka_ramification(const struct NochkaScene *scene, char **out_json);

/**
 * # Safety
 * `scene` must be a live handle and `out_json` a valid pointer.
 */
enum NochkaStatus nochka_unicity_threshold(const struct NochkaScene *scene, char **out_json);

/**
 * Releases a string returned through `out_json`. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void nochka_string_free(char *s);

/**
 * Message of the last failed call on this thread, or null. Valid until the next call.
 */
const char *nochka_last_error_message(void);

/**
 * Library version as a static string.
 */
const char *nochka_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* NOCHKA_H */
