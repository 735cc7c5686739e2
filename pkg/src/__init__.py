"""
imgkit source package.

A self-contained 2-D image processing library: filters, features, geometric
transforms, measurements and the PNM codec the CLI pipelines run on.
"""
