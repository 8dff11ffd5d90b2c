import json
import os
import tempfile
from io import StringIO

from django.conf import settings
from django.test import SimpleTestCase

from config.exceptions import InconclusiveError

from .base import ReportCommand
from .renderers import csv_cell, render_csv, render_json
from .runner import run


def invoke(*argv):
    out, err = StringIO(), StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


class RendererTestCase(SimpleTestCase):

    def test_json_document(self):
        self.assertEqual(render_json('pnt', [{'n': 1}]), '{"command":"pnt","rows":[{"n":1}]}')

    def test_csv_cells(self):
        self.assertEqual(csv_cell(None), '')
        self.assertEqual(csv_cell(True), 'true')
        self.assertEqual(csv_cell([[2, 1]]), '[[2,1]]')
        self.assertEqual(render_csv(['a', 'b'], [{'a': 1, 'b': [1, 2]}]), 'a,b\n1,"[1,2]"\n')


class RunnerTestCase(SimpleTestCase):

    def test_success(self):
        code, out, _ = invoke('growth', '--rank', '2', '--max', '3', '--format', 'csv')
        self.assertEqual(code, 0)
        self.assertEqual(out, 'n,omega\n0,1\n1,5\n2,17\n3,53\n')

    def test_pnt_row(self):
        code, out, _ = invoke('pnt', '--max', '10', '--format', 'csv')
        self.assertEqual(code, 0)
        self.assertEqual(out.splitlines()[-1], '10,2520,7.832,0.783,true')

    def test_girth_value(self):
        code, out, _ = invoke('girth', '--rank', '2', '--radius', '1', '--cap', '6')
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)['rows'][0]['value'], 5)

    def test_unknown_subcommand(self):
        code, _, err = invoke('frobnicate')
        self.assertEqual(code, 1)
        self.assertIn('usage', err)

    def test_input_error_exits_one(self):
        code, out, err = invoke('growth', '--rank', '0', '--max', '1')
        self.assertEqual(code, 1)
        self.assertEqual(out, '')
        self.assertIn('rank', err)

    def test_bad_arguments_exit_one(self):
        self.assertEqual(invoke('growth', '--rank', 'two', '--max', '1')[0], 1)

    def test_inconclusive_exits_two_after_emitting(self):
        code, out, _ = invoke('dmax', '--rank', '2', '--word', 'abAB', '--normal', '--cap', '5')
        self.assertEqual(code, 2)
        self.assertEqual(json.loads(out)['rows'][0]['value'], 'unknown')

    def test_out_file(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, 'growth.json')
            code, out, _ = invoke('growth', '--rank', '1', '--max', '2', '--out', path)
            with open(path) as handle:
                document = json.load(handle)
        self.assertEqual((code, out), (0, ''))
        self.assertEqual([row['omega'] for row in document['rows']], [1, 3, 5])


class DeterminismTestCase(SimpleTestCase):

    def assertSameAcrossThreads(self, *argv):
        results = {invoke(*argv, '--threads', threads)[:2] for threads in ('1', '2', '8')}
        self.assertEqual(len(results), 1, results)
        return results.pop()

    def test_dmax(self):
        code, _ = self.assertSameAcrossThreads('dmax', '--rank', '2', '--radius', '2', '--normal')
        self.assertEqual(code, 0)

    def test_girth(self):
        code, out = self.assertSameAcrossThreads('girth', '--rank', '2', '--radius', '1', '--cap', '6')
        self.assertEqual((code, json.loads(out)['rows'][0]['value']), (0, 5))

    def test_covers_scan(self):
        code, _ = self.assertSameAcrossThreads('covers-scan', '--m', '2', '--max-degree', '5', '--marked', '1')
        self.assertEqual(code, 0)

    def test_theorem4(self):
        code, _ = self.assertSameAcrossThreads('theorem4', '--n', '2', '--cap', '6', '--format', 'csv')
        self.assertEqual(code, 0)

    def test_power_witness(self):
        self.assertSameAcrossThreads('power-witness', '--n', '3', '--cap', '4')

    def test_lcm_witness(self):
        code, _ = self.assertSameAcrossThreads('lcm-witness', '--set', 'a,aa,b', '--verify-cap', '5')
        self.assertEqual(code, 0)


class ReportCommandTestCase(SimpleTestCase):

    def test_unresolved_rows_are_inconclusive(self):
        with self.assertRaises(InconclusiveError) as raised:
            ReportCommand().finish([{'value': 'unknown'}, {'resolved': False}, {'resolved': True, 'value': 3}])
        self.assertEqual(raised.exception.params, {'rows': 2})
        self.assertEqual(raised.exception.exit_code, 2)
        ReportCommand().finish([{'resolved': True, 'value': 3}])

    def test_no_auth_stack(self):
        self.assertNotIn('django.contrib.auth', settings.INSTALLED_APPS)
        self.assertNotIn('django.contrib.contenttypes', settings.INSTALLED_APPS)
        expected = '{"command":"growth","rows":[{"n":0,"omega":1}]}\n'
        self.assertEqual(invoke('growth', '--rank', '1', '--max', '0')[:2], (0, expected))
