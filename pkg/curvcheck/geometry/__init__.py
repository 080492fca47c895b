from curvcheck.geometry.chart import ChartManifold, PointGeometry, \
    point_geometry
from curvcheck.geometry.fields import SymTensorField, covariant_derivative, \
    divergence, laplace_beltrami

__all__ = ['ChartManifold', 'PointGeometry', 'point_geometry',
           'SymTensorField', 'covariant_derivative', 'divergence',
           'laplace_beltrami']
