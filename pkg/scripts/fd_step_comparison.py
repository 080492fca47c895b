from time import time
import os
from os.path import join
import argparse
import numpy as np
import pandas as pd

from curvcheck.catalog.targets import get_target
from curvcheck.config.fd import FDSpec
from curvcheck.exceptions import CurvCheckError
from curvcheck.geometry import point_geometry

parser = argparse.\
    ArgumentParser(description="Compare finite-difference steps on catalog "
                               "charts with known scalar curvature.")

parser.add_argument('--n_steps', default=6, type=int,
                    help='Number of steps; each halves the previous one.')

parser.add_argument('--max_step', default=1e-2, type=float,
                    help='Largest step.')

parser.add_argument('--save_dir', default=None,
                    help='Directory where we (optionally) save the output.')

args = parser.parse_args()


#########
# setup #
#########

targets = ['sphere:n=2', 'sphere:n=3,r=0.5', 'hyperbolic:n=3',
           'cylinder:n=3', 'nonlcf', 's2xh2']

steps = args.max_step * 0.5 ** np.arange(args.n_steps)

#############################
# evaluate at each step size #
#############################
results = []
for name in targets:
    target = get_target(name)
    x = target.chart.center() + 0.05
    s_true = target.get_known('scalar')

    for step in steps:
        for richardson in [False, True]:
            fd = FDSpec(step=step, richardson=richardson)
            try:
                start_time = time()
                geom = point_geometry(target.chart, x, fd=fd)
                t = time() - start_time
                err = abs(geom.scalar - s_true)
                sym = max(geom.symmetry_residuals().values())
            except CurvCheckError as e:
                print('{} failed at step {:1.2e}: {}'.format(name, step, e))
                err, sym, t = None, None, None

            results.append({'target': name, 'step': step,
                            'richardson': richardson, 'scalar_err': err,
                            'symmetry': sym, 'runtime': t})

###################
# format results  #
###################
results = pd.DataFrame(results)

# observed order: log2 of the error ratio between consecutive steps
results['order'] = np.nan
for (name, richardson), df in results.groupby(['target', 'richardson']):
    err = df['scalar_err'].astype(float).values
    ratio = err[:-1] / err[1:]
    results.loc[df.index[1:], 'order'] = np.log2(ratio)

#################
# Print results #
#################
print('n_steps = {}, max_step = {}'.format(args.n_steps, args.max_step))
for name in targets:
    print('\n' + name)
    for richardson in [False, True]:
        df = results.query("target == @name & richardson == @richardson")
        print('richardson = {}'.format(richardson))
        print(df.drop(columns=['target', 'richardson']).
              to_string(index=False))

# possibly save results
if args.save_dir is not None:
    os.makedirs(args.save_dir, exist_ok=True)
    name_stub = 'steps={}_max={}'.format(args.n_steps, args.max_step)
    results.to_csv(join(args.save_dir,
                        '{}_fd_comparison.csv'.format(name_stub)))
