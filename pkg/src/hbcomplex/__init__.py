"""Exact combinatorial workbench for curves and incompressible surfaces
on the boundary of a genus-g handlebody.

Curves live as normal coordinates on a fixed one-vertex triangulation of
the boundary surface; intersection numbers, Dehn twists, complements,
and the vertex/adjacency structure of the surface complex are all
computed exactly over the integers.  See the individual modules:

    surface      -- the triangulated model surface
    words        -- free and surface group words
    curves       -- canonical curve classes and their invariants
    drawing      -- curve drawings and normal-form reduction
    arrangement  -- crossings, regions, bigons of a drawing
    intersect    -- intersection numbers, disjoint realization, complements
    twists       -- Dehn twists
    refcurves    -- reference curves and frozen decompositions
    complexes    -- vertices, adjacency, simplices, links, cliques
    pools        -- twist-generated pools, graphs, metrics, group actions
    serialize    -- canonical JSON and DOT forms
    cli          -- command-line front end
"""

__version__ = "0.1.0"
