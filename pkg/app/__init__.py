"""
The MECS toolkit application package.

This package provides the following components:

- **mecs**: Graph models, core graph routines, validation and text formats.

- **oracle**: The exhaustive solver every other engine is checked against.

- **kernel**: Kernelization around a deg-1-modulator via the expansion lemma.

- **fpt**: Divide-and-color and the rainbow matching reduction, both
  parameterized by l.

- **ilp**: The exact solver parameterized by the vertex cover number.

- **gadgets**: The Red-Blue Dominating Set reduction and its claim checks.

The command-line front end lives in `app.cli`, the benchmark and
cross-validation harness in `app.bench`, and environment settings in
`app.config`.
"""
