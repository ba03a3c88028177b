/* Public C API for the secant-forge library.
 *
 * Placeholder during bring-up; the full surface (contexts, ideals,
 * varieties, computations returning JSON) lands with the capi module. */
#ifndef SECANTFORGE_H
#define SECANTFORGE_H

#ifdef __cplusplus
extern "C" {
#endif

const char* sf_version(void);

#ifdef __cplusplus
}
#endif

#endif /* SECANTFORGE_H */
